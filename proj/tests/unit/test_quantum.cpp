// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "vqfl/error.hpp"
#include "vqfl/quantum/gate.hpp"
#include "vqfl/quantum/state.hpp"
#include "vqfl/rng.hpp"

namespace {

using vqfl::quantum::Complex;
using vqfl::quantum::Gate;
using vqfl::quantum::GateKind;
using vqfl::quantum::QuantumState;
constexpr double kPi = std::numbers::pi;

void expect_amp(const QuantumState& s, std::size_t i, Complex v, double tol = 1e-12) {
  EXPECT_NEAR(s[i].real(), v.real(), tol) << "index " << i;
  EXPECT_NEAR(s[i].imag(), v.imag(), tol) << "index " << i;
}

// 2x2 product on a single-qubit state, independent of the kernels.
std::array<Complex, 2> mat_vec(const vqfl::simd::Mat2& m, std::array<Complex, 2> v) {
  return {m.m00 * v[0] + m.m01 * v[1], m.m10 * v[0] + m.m11 * v[1]};
}

Gate random_gate(unsigned n, vqfl::Rng& rng) {
  const auto kind = static_cast<GateKind>(rng.below(n >= 2 ? 8 : 5));
  const auto a = static_cast<unsigned>(rng.below(n));
  auto b = a;
  if (n >= 2) {
    b = static_cast<unsigned>(rng.below(n - 1));
    if (b >= a) ++b;
  }
  const double theta = rng.uniform(-2 * kPi, 2 * kPi);
  switch (kind) {
    case GateKind::H: return Gate::h(a);
    case GateKind::X: return Gate::x(a);
    case GateKind::RX: return Gate::rx(a, theta);
    case GateKind::RY: return Gate::ry(a, theta);
    case GateKind::RZ: return Gate::rz(a, theta);
    case GateKind::CX: return Gate::cx(a, b);
    case GateKind::CZ: return Gate::cz(a, b);
    case GateKind::CRZ: return Gate::crz(a, b, theta);
  }
  return Gate::h(a);
}

TEST(QuantumState, InitialStateIsAllZeros) {
  QuantumState s(3);
  EXPECT_EQ(s.dimension(), 8u);
  expect_amp(s, 0, 1.0);
  for (std::size_t i = 1; i < 8; ++i) expect_amp(s, i, 0.0);
}

TEST(QuantumState, RejectsBadQubitCounts) {
  EXPECT_THROW(QuantumState(0), vqfl::InvalidArgument);
  EXPECT_THROW(QuantumState(vqfl::quantum::kMaxQubits + 1), vqfl::InvalidArgument);
  EXPECT_THROW(QuantumState::basis(2, 4), vqfl::InvalidArgument);
  EXPECT_THROW(QuantumState::from_amplitudes({1.0, 0.0, 0.0}), vqfl::InvalidArgument);
  EXPECT_THROW(QuantumState::from_amplitudes({1.0, 1.0}), vqfl::InvalidArgument);
}

TEST(ApplyGate, HadamardOnZero) {
  const auto s = vqfl::quantum::apply_gate(QuantumState(1), Gate::h(0));
  expect_amp(s, 0, 1.0 / std::sqrt(2.0));
  expect_amp(s, 1, 1.0 / std::sqrt(2.0));
}

TEST(ApplyGate, XOnZero) {
  const auto s = vqfl::quantum::apply_gate(QuantumState(1), Gate::x(0));
  expect_amp(s, 0, 0.0);
  expect_amp(s, 1, 1.0);
}

TEST(ApplyGate, RyHalfPiMatchesMatrixOracle) {
  const Gate g = Gate::ry(0, kPi / 2);
  const auto expected = mat_vec(g.matrix(), {1.0, 0.0});
  const auto s = vqfl::quantum::apply_gate(QuantumState(1), g);
  expect_amp(s, 0, expected[0]);
  expect_amp(s, 1, expected[1]);
  expect_amp(s, 0, std::cos(kPi / 4));
  expect_amp(s, 1, std::sin(kPi / 4));
}

TEST(ApplyGate, RotationMatricesMatchClosedForm) {
  const double t = 0.731;
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const auto rx = Gate::rx(0, t).matrix();
  EXPECT_NEAR(std::abs(rx.m00 - Complex(c, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rx.m01 - Complex(0, -s)), 0.0, 1e-15);
  const auto rz = Gate::rz(0, t).matrix();
  EXPECT_NEAR(std::abs(rz.m00 - std::polar(1.0, -t / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rz.m11 - std::polar(1.0, t / 2)), 0.0, 1e-15);
}

TEST(ApplyGate, InvalidTargetsRejected) {
  QuantumState s(2);
  EXPECT_THROW(s.apply(Gate::h(2)), vqfl::InvalidArgument);
  EXPECT_THROW(s.apply(Gate::cx(0, 0)), vqfl::InvalidArgument);
  EXPECT_THROW(s.apply(Gate::cx(0, 5)), vqfl::InvalidArgument);
  EXPECT_THROW(s.apply(Gate::ry(0, std::nan(""))), vqfl::InvalidArgument);
}

TEST(ApplyGate, LittleEndianIndexing) {
  // X on qubit 1 of |000> sets bit 1 of the basis index.
  const auto s = vqfl::quantum::apply_gate(QuantumState(3), Gate::x(1));
  expect_amp(s, 2, 1.0);
  vqfl::Rng rng(0);
  EXPECT_EQ(vqfl::quantum::measure_all(s, rng), "010");
  const auto t = vqfl::quantum::apply_gate(QuantumState(3), Gate::x(0));
  EXPECT_EQ(vqfl::quantum::measure_all(t, rng), "100");
}

TEST(ApplyGate, CnotControlsOnFirstTarget) {
  QuantumState s(2);
  s.apply(Gate::x(0));
  s.apply(Gate::cx(0, 1));
  expect_amp(s, 3, 1.0);
  QuantumState u(2);
  u.apply(Gate::x(1));
  u.apply(Gate::cx(0, 1));
  expect_amp(u, 2, 1.0);
}

TEST(ApplyGate, CrzPhasesOnlyControlledSubspace) {
  QuantumState s(2);
  s.apply(Gate::h(0));
  s.apply(Gate::h(1));
  s.apply(Gate::crz(0, 1, kPi));
  expect_amp(s, 0, 0.5);
  expect_amp(s, 2, 0.5);
  expect_amp(s, 1, 0.5 * std::polar(1.0, -kPi / 2));
  expect_amp(s, 3, 0.5 * std::polar(1.0, kPi / 2));
}

TEST(RunCircuit, EmptyCircuitIsIdentity) {
  const auto init = QuantumState::basis(2, 3);
  const auto s = vqfl::quantum::run_circuit({2, {}}, init);
  for (std::size_t i = 0; i < 4; ++i) expect_amp(s, i, init[i]);
}

TEST(RunCircuit, HadamardTwiceIsIdentity) {
  const auto s = vqfl::quantum::run_circuit({1, {Gate::h(0), Gate::h(0)}}, QuantumState(1));
  expect_amp(s, 0, 1.0);
  expect_amp(s, 1, 0.0);
}

TEST(RunCircuit, HadamardTensorProduct) {
  const auto s = vqfl::quantum::run_circuit({2, {Gate::h(0), Gate::h(1)}}, QuantumState(2));
  for (std::size_t i = 0; i < 4; ++i) expect_amp(s, i, 0.5);
}

TEST(RunCircuit, QubitCountMismatchRejected) {
  EXPECT_THROW(vqfl::quantum::run_circuit({3, {}}, QuantumState(2)), vqfl::InvalidArgument);
}

TEST(Probabilities, Examples) {
  auto p = vqfl::quantum::probabilities(QuantumState::basis(1, 1));
  EXPECT_DOUBLE_EQ(p[0], 0.0);
  EXPECT_DOUBLE_EQ(p[1], 1.0);
  p = vqfl::quantum::probabilities(vqfl::quantum::apply_gate(QuantumState(1), Gate::h(0)));
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[1], 0.5, 1e-12);
  p = vqfl::quantum::probabilities(vqfl::quantum::apply_gate(QuantumState(1), Gate::ry(0, kPi / 3)));
  const double c = std::cos(kPi / 6), s = std::sin(kPi / 6);
  EXPECT_NEAR(p[0], c * c, 1e-12);
  EXPECT_NEAR(p[1], s * s, 1e-12);
  EXPECT_NEAR(p[0], 0.75, 1e-12);
  EXPECT_NEAR(p[1], 0.25, 1e-12);
}

TEST(MeasureAll, BasisStatesAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    vqfl::Rng rng(seed);
    EXPECT_EQ(vqfl::quantum::measure_all(QuantumState(4), rng), "0000");
    EXPECT_EQ(vqfl::quantum::measure_all(QuantumState::basis(1, 1), rng), "1");
  }
}

TEST(MeasureAll, HadamardFrequency) {
  const auto s = vqfl::quantum::apply_gate(QuantumState(1), Gate::h(0));
  vqfl::Rng rng(123);
  int ones = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) ones += vqfl::quantum::measure_all(s, rng) == "1";
  const double frac = static_cast<double>(ones) / n;
  EXPECT_GE(frac, 0.49);
  EXPECT_LE(frac, 0.51);
}

TEST(MeasureAll, SampleFrequenciesFollowProbabilities) {
  QuantumState s(2);
  s.apply(Gate::ry(0, 1.1));
  s.apply(Gate::ry(1, 2.3));
  const auto p = vqfl::quantum::probabilities(s);
  vqfl::Rng rng(7);
  std::array<int, 4> hist{};
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++hist[vqfl::quantum::sample_index(s, rng)];
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(hist[i] / double(n), p[i], 5 * std::sqrt(p[i] * (1 - p[i]) / n) + 1e-9);
  }
}

TEST(ExpectationZ, Examples) {
  EXPECT_DOUBLE_EQ(vqfl::quantum::expectation_z(QuantumState(1), 0), 1.0);
  EXPECT_DOUBLE_EQ(vqfl::quantum::expectation_z(QuantumState::basis(1, 1), 0), -1.0);
  EXPECT_NEAR(vqfl::quantum::expectation_z(
                  vqfl::quantum::apply_gate(QuantumState(1), Gate::h(0)), 0),
              0.0, 1e-12);
  EXPECT_THROW(vqfl::quantum::expectation_z(QuantumState(1), 1), vqfl::InvalidArgument);
}

TEST(Properties, NormPreservedOverRandomCircuits) {
  vqfl::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned>(1 + rng.below(8));
    QuantumState s(n);
    for (int g = 0; g < 64; ++g) s.apply(random_gate(n, rng));
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10);
  }
}

TEST(Properties, GateInverseRoundTrip) {
  vqfl::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned>(1 + rng.below(6));
    QuantumState s(n);
    for (unsigned q = 0; q < n; ++q) s.apply(Gate::ry(q, rng.uniform(0, kPi)));
    const QuantumState before = s;
    std::vector<Gate> gates;
    for (int g = 0; g < 32; ++g) gates.push_back(random_gate(n, rng));
    s.apply(gates);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) s.apply(it->inverse());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      ASSERT_NEAR(std::abs(s[i] - before[i]), 0.0, 1e-12);
    }
  }
}

TEST(Properties, ProbabilitiesSumToOne) {
  vqfl::Rng rng(5);
  QuantumState s(5);
  for (int g = 0; g < 40; ++g) s.apply(random_gate(5, rng));
  double sum = 0.0;
  for (double p : vqfl::quantum::probabilities(s)) {
    ASSERT_GE(p, 0.0);
    sum += p;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

}  // namespace
