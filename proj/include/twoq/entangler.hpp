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

#pragma once

// Perfect entanglers: the Ent functional, hull and inequality predicates,
// maximally entangling inputs and chamber volume accounting.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "twoq/cartan.hpp"
#include "twoq/linalg.hpp"

namespace twoq {

/// Boundary tolerance of the hull and polyhedron predicates.
inline constexpr double kHullTol = 1e-9;

struct EntValue {
  Complex value;
  double magnitude = 0.0;
};

struct PeVerdict {
  bool is_pe = false;
  /// Convex weights w with sum_k w_k lambda_k = 0 over the eigenvalues of m.
  std::optional<RVec4> hull_witness;
  /// cos(g / 2) for the largest circular gap g between eigenphases of m:
  /// the signed distance of 0 from the nearest hull edge.
  double margin = 0.0;
};

struct EntanglingInput {
  CVec4 psi_in;
  CVec4 psi_out;
};

struct VolumeReport {
  double chamber = 0.0;
  double cut_lqpo = 0.0;
  double cut_npa2a3 = 0.0;
  double cut_lmna1 = 0.0;
  double pe = 0.0;
};

/// psi^T P psi with P = -1/2 YY. Throws NotNormalized.
EntValue ent(const CVec4& psi);

/// Hull test on the eigenvalues of m(U).
PeVerdict is_perfect_entangler(const Gate4& u);

/// Hull test on four unit-circle phases.
PeVerdict hull_verdict(const std::array<double, 4>& phases);

/// Polyhedron membership of canonicalize(c).
bool pe_from_coords(const CartanCoord& c);

/// The two-branch inequality disjunction over coordinate permutations,
/// evaluated on canonicalize(c).
bool pe_inequalities(const CartanCoord& c);

/// A product state psi_in with |Ent(U psi_in)| = 1/2. Throws
/// NotPerfectEntangler.
EntanglingInput entangling_input(const Gate4& u);

VolumeReport pe_volume_exact();

/// Volume of the tetrahedron with the given vertices.
double tetrahedron_volume(const CartanCoord& a, const CartanCoord& b,
                          const CartanCoord& c, const CartanCoord& d);

/// Uniform sample of the chamber by sorting three uniforms on [0, pi] and
/// rejecting c1 + c2 > pi.
template <typename Rng>
CartanCoord sample_chamber(Rng& rng) {
  for (;;) {
    CartanCoord c;
    for (double& x : c) x = kPi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (c[0] < c[1]) std::swap(c[0], c[1]);
    if (c[1] < c[2]) std::swap(c[1], c[2]);
    if (c[0] < c[1]) std::swap(c[0], c[1]);
    if (c[0] + c[1] <= kPi) return c;
  }
}

/// Samples per Monte Carlo block; block b draws from an mt19937_64 seeded
/// with mc_block_seed(seed, b).
inline constexpr std::uint64_t kMcBlockSize = 1u << 16;
std::uint64_t mc_block_seed(std::uint64_t seed, std::uint64_t block);

/// Fraction of n uniform chamber samples that are perfect entanglers
/// (Euclidean measure on the chamber). Identical for any thread count.
double pe_fraction_mc(std::uint64_t n, std::uint64_t seed, int threads = 0);

}  // namespace twoq
