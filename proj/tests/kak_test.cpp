// Copyright 2026 The twoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoq/kak.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "twoq/errors.hpp"
#include "twoq/invariants.hpp"
#include "twoq/weyl.hpp"

namespace twoq {
namespace {

constexpr double h = kPi / 2;
constexpr double q = kPi / 4;

void expect_valid(const Gate4& u, const KakDecomposition& d) {
  EXPECT_LT((kak_reconstruct(d) - u).norm(), 1e-9);
  EXPECT_TRUE(is_local_gate(d.k1));
  EXPECT_TRUE(is_local_gate(d.k2));
  EXPECT_LT((d.a_factor - cartan_factor(d.coords)).norm(), 1e-14);
  // The magic-basis images of k1, k2 are real orthogonal with det +1.
  for (const Gate4* k : {&d.k1, &d.k2}) {
    const CMat4 o = magic_basis().adjoint() * (*k) * magic_basis();
    EXPECT_LT(o.imag().norm(), 1e-8);
    EXPECT_NEAR(o.real().determinant(), 1.0, 1e-8);
  }
  EXPECT_LE(chamber_violation(d.coords), kBaseTol);
}

TEST(KakDecompose, Identity) {
  const KakDecomposition d = kak_decompose(Gate4::Identity());
  EXPECT_NEAR(std::remainder(d.alpha, kPi / 2), 0.0, 1e-12);
  for (double c : d.coords) EXPECT_NEAR(c, 0.0, 1e-12);
  expect_valid(Gate4::Identity(), d);
}

TEST(KakDecompose, NamedGates) {
  struct Case {
    const char* name;
    CartanCoord c;
  };
  for (const Case& cs : {Case{"cnot", {h, 0, 0}}, Case{"cz", {h, 0, 0}},
                         Case{"swap", {h, h, h}}, Case{"sqrtswap", {q, q, q}},
                         Case{"sqrtswap_dag", {3 * q, q, q}},
                         Case{"cu:0.3", {0.3, 0, 0}}}) {
    const Gate4 u = named_gate(cs.name);
    const KakDecomposition d = kak_decompose(u);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(d.coords[i], cs.c[i], 1e-9) << cs.name;
    expect_valid(u, d);
  }
}

TEST(KakDecompose, HaarRandomRoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const Gate4 u = testing::haar_unitary(rng);
    const KakDecomposition d = kak_decompose(u);
    expect_valid(u, d);
    const CartanCoord c = gate_coords(u);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(d.coords[i], c[i], 1e-8);
  }
}

TEST(KakDecompose, NearDegenerateSpectra) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const double c1 = testing::uniform(rng, 0.2, 1.4);
    const double c3 = testing::uniform(rng, 0.05, 0.4);
    const CartanCoord c{c1 + 0.2, c3 + 5e-7, c3};
    const Gate4 u = std::exp(kI * testing::uniform(rng, 0, 6.3)) *
                    testing::random_local(rng) * cartan_factor(c) *
                    testing::random_local(rng);
    const KakDecomposition d = kak_decompose(u);
    expect_valid(u, d);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(d.coords[i], c[i], 1e-8);
  }
}

TEST(KakDecompose, ChamberBoundaryPoints) {
  std::mt19937_64 rng(43);
  const std::vector<CartanCoord> points = {
      {0.7, 0.7, 0.2}, {0.7, 0.3, 0.3}, {0.9, 0.4, 0.0}, {2.0, kPi - 2.0, 0.5},
      {h, h, 0.0},     {h, 0.0, 0.0},   {q, q, 0.0},     {h, q, q},
      {1e-9, 0.0, 0.0}, {h, h, h - 1e-9}};
  for (const CartanCoord& c : points) {
    for (int trial = 0; trial < 5; ++trial) {
      const Gate4 u = testing::random_local(rng) * cartan_factor(c) *
                      testing::random_local(rng);
      const KakDecomposition d = kak_decompose(u);
      expect_valid(u, d);
      const CartanCoord want = canonicalize(c);
      for (int i = 0; i < 3; ++i) EXPECT_NEAR(d.coords[i], want[i], 1e-8);
    }
  }
}

TEST(KakDecompose, RejectsNonUnitary) {
  try {
    kak_decompose(Gate4::Zero());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnitary);
  }
}

TEST(KakReconstruct, TrivialDecompositions) {
  KakDecomposition d;
  d.k1 = d.k2 = Gate4::Identity();
  d.coords = {q, q, q};
  d.a_factor = cartan_factor(d.coords);
  EXPECT_TRUE(locally_equivalent(kak_reconstruct(d), named_gate("sqrtswap")));
  d.coords = {0, 0, 0};
  d.a_factor = cartan_factor(d.coords);
  EXPECT_LT((kak_reconstruct(d) - Gate4::Identity()).norm(), 1e-15);
}

TEST(FactorLocal, PauliOnFirstQubit) {
  const LocalFactors f = factor_local(kron2(pauli_x(), pauli_i()));
  const Gate4 rebuilt = std::exp(kI * f.phase) * kron2(f.a, f.b);
  EXPECT_LT((rebuilt - kron2(pauli_x(), pauli_i())).norm(), 1e-12);
  EXPECT_LT(std::abs(f.b(0, 1)) + std::abs(f.b(1, 0)), 1e-12);
  EXPECT_LT(std::abs(f.a(0, 0)) + std::abs(f.a(1, 1)), 1e-12);
}

TEST(FactorLocal, RandomProducts) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 500; ++trial) {
    const CMat2 a = testing::random_su2(rng);
    const CMat2 b = testing::random_su2(rng);
    const double phi = testing::uniform(rng, -3.0, 3.0);
    const Gate4 k = std::exp(kI * phi) * kron2(a, b);
    const LocalFactors f = factor_local(k);
    EXPECT_LT((std::exp(kI * f.phase) * kron2(f.a, f.b) - k).norm(), 1e-10);
    EXPECT_LT(std::abs(f.a.determinant() - 1.0), 1e-12);
    EXPECT_LT(std::abs(f.b.determinant() - 1.0), 1e-12);
    // Factors agree with the originals up to a common sign pair.
    const double sa = (f.a - a).norm() < (f.a + a).norm() ? 1.0 : -1.0;
    const double sb = (f.b - b).norm() < (f.b + b).norm() ? 1.0 : -1.0;
    EXPECT_LT((f.a - sa * a).norm(), 1e-10);
    EXPECT_LT((f.b - sb * b).norm(), 1e-10);
  }
}

TEST(FactorLocal, KakFactorsSplit) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const KakDecomposition d = kak_decompose(testing::haar_unitary(rng));
    for (const Gate4* k : {&d.k1, &d.k2}) {
      const LocalFactors f = factor_local(*k);
      EXPECT_LT((std::exp(kI * f.phase) * kron2(f.a, f.b) - *k).norm(), 1e-10);
    }
  }
}

TEST(FactorLocal, RejectsCnot) {
  try {
    factor_local(named_gate("cnot"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLocal);
  }
}

}  // namespace
}  // namespace twoq
