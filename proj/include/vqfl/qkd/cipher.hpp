// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vqfl/qkd/bb84.hpp"

namespace vqfl::qkd {

using Bytes = std::vector<std::uint8_t>;

enum class CipherKind { Shift256, Xor };

std::string to_string(CipherKind kind);
CipherKind cipher_from_string(const std::string& name);

// First 8 * needed_bytes key bits packed big-endian (first bit is the MSB of
// byte 0). Throws KeyShortfall when the key is too short.
Bytes fit_key_to_message(std::span<const std::uint8_t> key_bits, std::size_t needed_bytes);

// c_i = (m_i + 2 k_i) mod 256 and its inverse.
Bytes encrypt_bytes(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key);
Bytes decrypt_bytes(std::span<const std::uint8_t> cipher, std::span<const std::uint8_t> key);

// Bitwise one-time pad over 0/1 sequences; self-inverse.
Bits xor_cipher(std::span<const std::uint8_t> message_bits, std::span<const std::uint8_t> key_bits);
// Same pad applied to packed bytes.
Bytes xor_bytes(std::span<const std::uint8_t> message, std::span<const std::uint8_t> key);

Bytes encrypt(CipherKind kind, std::span<const std::uint8_t> message,
              std::span<const std::uint8_t> key);
Bytes decrypt(CipherKind kind, std::span<const std::uint8_t> cipher,
              std::span<const std::uint8_t> key);

}  // namespace vqfl::qkd
