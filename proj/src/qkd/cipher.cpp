// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/qkd/cipher.hpp"

#include "vqfl/error.hpp"

namespace vqfl::qkd {
namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InvalidArgument("key length " + std::to_string(b) + " does not match message length " +
                          std::to_string(a));
  }
}

}  // namespace

std::string to_string(CipherKind kind) {
  return kind == CipherKind::Shift256 ? "shift256" : "xor";
}

CipherKind cipher_from_string(const std::string& name) {
  if (name == "shift256") return CipherKind::Shift256;
  if (name == "xor") return CipherKind::Xor;
  throw ConfigError("cipher", "expected 'shift256' or 'xor', got '" + name + "'");
}

Bytes fit_key_to_message(std::span<const std::uint8_t> key_bits, std::size_t needed_bytes) {
  if (key_bits.size() < 8 * needed_bytes) {
    throw KeyShortfall("key has " + std::to_string(key_bits.size()) + " bits, need " +
                       std::to_string(8 * needed_bytes));
  }
  Bytes out(needed_bytes, 0);
  for (std::size_t i = 0; i < 8 * needed_bytes; ++i) {
    out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | (key_bits[i] & 1u));
  }
  return out;
}

Bytes encrypt_bytes(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key) {
  require_same_length(message.size(), key.size());
  Bytes out(message.size());
  for (std::size_t i = 0; i < message.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((message[i] + 2u * key[i]) & 0xFFu);
  }
  return out;
}

Bytes decrypt_bytes(std::span<const std::uint8_t> cipher, std::span<const std::uint8_t> key) {
  require_same_length(cipher.size(), key.size());
  Bytes out(cipher.size());
  for (std::size_t i = 0; i < cipher.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((cipher[i] + 256u - ((2u * key[i]) & 0xFFu)) & 0xFFu);
  }
  return out;
}

Bits xor_cipher(std::span<const std::uint8_t> message_bits,
                std::span<const std::uint8_t> key_bits) {
  require_same_length(message_bits.size(), key_bits.size());
  Bits out(message_bits.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((message_bits[i] ^ key_bits[i]) & 1u);
  }
  return out;
}

Bytes xor_bytes(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key) {
  require_same_length(message.size(), key.size());
  Bytes out(message.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(message[i] ^ key[i]);
  }
  return out;
}

Bytes encrypt(CipherKind kind, std::span<const std::uint8_t> message,
              std::span<const std::uint8_t> key) {
  return kind == CipherKind::Shift256 ? encrypt_bytes(message, key) : xor_bytes(message, key);
}

Bytes decrypt(CipherKind kind, std::span<const std::uint8_t> cipher,
              std::span<const std::uint8_t> key) {
  return kind == CipherKind::Shift256 ? decrypt_bytes(cipher, key) : xor_bytes(cipher, key);
}

}  // namespace vqfl::qkd
