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

#include "twoq/entangler.hpp"

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

Gate4 dressed(const CartanCoord& c, std::mt19937_64& rng) {
  return testing::random_local(rng) * cartan_factor(c) * testing::random_local(rng);
}

CVec4 basis_state(int i) {
  CVec4 v = CVec4::Zero();
  v(i) = 1.0;
  return v;
}

// Chamber point away from every face of the PE polyhedron.
CartanCoord interior_sample(std::mt19937_64& rng) {
  for (;;) {
    const CartanCoord c = sample_chamber(rng);
    const double d = std::min({std::abs(c[0] + c[1] - h), std::abs(c[1] + c[2] - h),
                               std::abs(c[0] - c[1] - h)});
    if (d > 1e-4) return c;
  }
}

TEST(Ent, Examples) {
  const CVec4 bell = (basis_state(0) + basis_state(3)) / std::sqrt(2.0);
  EXPECT_LT(std::abs(ent(bell).value - 0.5), 1e-15);
  EXPECT_NEAR(ent(bell).magnitude, 0.5, 1e-15);
  EXPECT_EQ(ent(basis_state(0)).value, Complex(0.0));
  const CVec4 plus = (basis_state(0) + basis_state(1)) / std::sqrt(2.0);
  EXPECT_LT(std::abs(ent(plus).value), 1e-15);
}

TEST(Ent, RejectsUnnormalized) {
  try {
    ent(2.0 * basis_state(0));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
}

TEST(Ent, BoundedOnRandomStates) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100000; ++trial) {
    EXPECT_LE(ent(testing::random_state(rng)).magnitude, 0.5 + 1e-12);
  }
}

TEST(Ent, VanishesOnProductStates) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Vector2cd a = Eigen::Vector2cd(testing::gaussian_complex(rng),
                                                testing::gaussian_complex(rng))
                                   .normalized();
    const Eigen::Vector2cd b = Eigen::Vector2cd(testing::gaussian_complex(rng),
                                                testing::gaussian_complex(rng))
                                   .normalized();
    CVec4 psi;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) psi(2 * i + j) = a(i) * b(j);
    EXPECT_LT(ent(psi).magnitude, 1e-12);
  }
}

TEST(Ent, LocalInvariance) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const CVec4 psi = testing::random_state(rng);
    const CVec4 moved = testing::random_local(rng) * psi;
    EXPECT_NEAR(ent(moved).magnitude, ent(psi).magnitude, 1e-10);
  }
}

TEST(PerfectEntangler, NamedGates) {
  EXPECT_TRUE(is_perfect_entangler(named_gate("cnot")).is_pe);
  EXPECT_TRUE(is_perfect_entangler(named_gate("cz")).is_pe);
  EXPECT_TRUE(is_perfect_entangler(named_gate("sqrtswap")).is_pe);
  EXPECT_TRUE(is_perfect_entangler(named_gate("sqrtswap_dag")).is_pe);
  EXPECT_FALSE(is_perfect_entangler(named_gate("swap")).is_pe);
  EXPECT_FALSE(is_perfect_entangler(Gate4::Identity()).is_pe);
}

TEST(PerfectEntangler, ControlledUOnlyAtCnot) {
  for (int i = 1; i <= 40; ++i) {
    const double g = h * i / 40.0;
    const Gate4 u = controlled_u(g, 0, 0);
    EXPECT_EQ(is_perfect_entangler(u).is_pe, i == 40) << g;
  }
}

TEST(PerfectEntangler, WitnessIsConvexCombination) {
  std::mt19937_64 rng(54);
  int checked = 0;
  while (checked < 500) {
    std::array<double, 4> phases;
    for (double& p : phases) p = testing::uniform(rng, -kPi, kPi);
    const PeVerdict v = hull_verdict(phases);
    if (!v.is_pe) {
      EXPECT_FALSE(v.hull_witness.has_value());
      continue;
    }
    ASSERT_TRUE(v.hull_witness.has_value());
    const RVec4& w = *v.hull_witness;
    EXPECT_NEAR(w.sum(), 1.0, 1e-12);
    Complex centroid = 0.0;
    for (int k = 0; k < 4; ++k) {
      EXPECT_GE(w(k), 0.0);
      centroid += w(k) * std::exp(kI * phases[k]);
    }
    EXPECT_LT(std::abs(centroid), 1e-9);
    ++checked;
  }
}

TEST(PerfectEntangler, GapMargin) {
  // Phases at 0, 1, 2, 3 leave a gap 2 pi - 3 > pi: not a perfect entangler.
  const PeVerdict out = hull_verdict({0.0, 1.0, 2.0, 3.0});
  EXPECT_FALSE(out.is_pe);
  EXPECT_NEAR(out.margin, std::cos((2 * kPi - 3.0) / 2), 1e-15);
  const PeVerdict in = hull_verdict({0.0, h, kPi, -h});
  EXPECT_TRUE(in.is_pe);
  EXPECT_NEAR(in.margin, std::cos(q), 1e-15);
}

TEST(PeFromCoords, Examples) {
  EXPECT_TRUE(pe_from_coords({h, 0, 0}));
  EXPECT_FALSE(pe_from_coords({h, h, h}));
  EXPECT_TRUE(pe_from_coords({q, q, 0}));
  EXPECT_TRUE(pe_from_coords({q, q, q}));
  EXPECT_TRUE(pe_from_coords({3 * q, q, q}));
  EXPECT_FALSE(pe_from_coords({0, 0, 0}));
  EXPECT_FALSE(pe_from_coords({0.3, 0.2, 0.1}));
  // Outside the chamber: canonicalized first.
  EXPECT_TRUE(pe_from_coords({0, h, 0}));
  EXPECT_TRUE(pe_from_coords({h + kPi, 0, 0}));
}

TEST(PePredicates, ThreeFormulationsAgree) {
  std::mt19937_64 rng(55);
  int compared = 0;
  while (compared < 10000) {
    const CartanCoord c = sample_chamber(rng);
    const PeVerdict hull = is_perfect_entangler(dressed(c, rng));
    if (std::abs(hull.margin) <= 1e-6) continue;
    EXPECT_EQ(pe_from_coords(c), hull.is_pe);
    EXPECT_EQ(pe_inequalities(c), hull.is_pe);
    ++compared;
  }
}

TEST(PePredicates, ReflectionSymmetries) {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 5000; ++trial) {
    const CartanCoord c = interior_sample(rng);
    const bool pe = pe_from_coords(c);
    EXPECT_EQ(pe_from_coords({kPi - c[0], c[1], c[2]}), pe);
    EXPECT_EQ(pe_from_coords({h - c[0], h - c[1], h - c[2]}), pe);
    EXPECT_EQ(is_perfect_entangler(cartan_factor({h - c[0], h - c[1], h - c[2]})).is_pe,
              pe);
  }
}

TEST(PePredicates, AntipodalFamilies) {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<CartanCoord> family;
    {
      const double c = testing::uniform(rng, q, h);
      family.push_back({c, h - c, testing::uniform(rng, 0, h - c)});
    }
    {
      const double c = testing::uniform(rng, h, 3 * q);
      family.push_back({c, c - h, testing::uniform(rng, 0, c - h)});
    }
    {
      const double c2 = testing::uniform(rng, q, h);
      family.push_back({testing::uniform(rng, c2, kPi - c2), c2, h - c2});
    }
    for (const CartanCoord& c : family) {
      EXPECT_TRUE(pe_from_coords(c));
      EXPECT_TRUE(pe_inequalities(c));
      EXPECT_TRUE(is_perfect_entangler(dressed(c, rng)).is_pe);
    }
  }
}

TEST(EntanglingInput, CnotIndependentState) {
  const CVec4 plus0 = (basis_state(0) + basis_state(2)) / std::sqrt(2.0);
  EXPECT_LT(ent(plus0).magnitude, 1e-15);
  EXPECT_NEAR(ent(named_gate("cnot") * plus0).magnitude, 0.5, 1e-15);
}

TEST(EntanglingInput, NamedGates) {
  for (const char* name : {"cnot", "cz", "sqrtswap", "sqrtswap_dag"}) {
    const Gate4 u = named_gate(name);
    const EntanglingInput r = entangling_input(u);
    EXPECT_NEAR(r.psi_in.norm(), 1.0, 1e-12);
    EXPECT_LT(ent(r.psi_in).magnitude, 1e-9) << name;
    EXPECT_LT((u * r.psi_in - r.psi_out).norm(), 1e-12) << name;
    EXPECT_NEAR(ent(r.psi_out).magnitude, 0.5, 1e-9) << name;
  }
}

TEST(EntanglingInput, RandomPerfectEntanglers) {
  std::mt19937_64 rng(58);
  int done = 0;
  while (done < 200) {
    const CartanCoord c = sample_chamber(rng);
    if (!pe_from_coords(c)) continue;
    const Gate4 u = std::exp(kI * testing::uniform(rng, 0, 6.3)) * dressed(c, rng);
    const EntanglingInput r = entangling_input(u);
    EXPECT_LT(ent(r.psi_in).magnitude, 1e-9);
    EXPECT_NEAR(ent(u * r.psi_in).magnitude, 0.5, 1e-9);
    ++done;
  }
}

TEST(EntanglingInput, RejectsNonEntanglers) {
  for (const char* name : {"swap", "identity", "cu:0.4"}) {
    try {
      entangling_input(named_gate(name));
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotPerfectEntangler);
    }
  }
}

TEST(Volumes, TetrahedronFormula) {
  EXPECT_NEAR(tetrahedron_volume({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}),
              1.0 / 6, 1e-16);
  EXPECT_NEAR(tetrahedron_volume({0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 2}),
              1.0 / 3, 1e-16);
}

TEST(Volumes, ExactDecomposition) {
  const double p3 = kPi * kPi * kPi;
  const VolumeReport v = pe_volume_exact();
  EXPECT_NEAR(v.chamber, p3 / 24, 1e-14);
  EXPECT_NEAR(v.cut_lqpo, p3 / 192, 1e-14);
  EXPECT_NEAR(v.cut_npa2a3, p3 / 96, 1e-14);
  EXPECT_NEAR(v.cut_lmna1, p3 / 192, 1e-14);
  EXPECT_NEAR(v.pe, p3 / 48, 1e-14);
  EXPECT_NEAR(v.pe, v.chamber - v.cut_lqpo - v.cut_npa2a3 - v.cut_lmna1, 1e-14);
  EXPECT_NEAR(v.pe / v.chamber, 0.5, 1e-15);
}

TEST(MonteCarlo, FractionNearHalf) {
  EXPECT_NEAR(pe_fraction_mc(1000000, 7), 0.5, 0.002);
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const double one = pe_fraction_mc(300000, 11, 1);
  EXPECT_EQ(pe_fraction_mc(300000, 11, 2), one);
  EXPECT_EQ(pe_fraction_mc(300000, 11, 5), one);
  EXPECT_EQ(pe_fraction_mc(300000, 11, 0), one);
}

TEST(MonteCarlo, SingleSampleInsideCut) {
  // Find a seed whose first draw lies strictly inside the identity corner cut.
  for (std::uint64_t seed = 0;; ++seed) {
    std::mt19937_64 rng(mc_block_seed(seed, 0));
    const CartanCoord c = sample_chamber(rng);
    if (c[0] + c[1] < h - 1e-3) {
      EXPECT_EQ(pe_fraction_mc(1, seed), 0.0);
      break;
    }
  }
}

TEST(MonteCarlo, MatchesHullTestOnSameStream) {
  constexpr std::uint64_t n = 10000;
  constexpr std::uint64_t seed = 99;
  std::mt19937_64 stream(mc_block_seed(seed, 0));
  std::mt19937_64 rng(59);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (is_perfect_entangler(dressed(sample_chamber(stream), rng)).is_pe) ++hits;
  }
  EXPECT_EQ(pe_fraction_mc(n, seed), static_cast<double>(hits) / n);
}

}  // namespace
}  // namespace twoq
