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

// The su(4) generator basis, the local/non-local splitting of a Hamiltonian,
// conjugation into the Cartan subalgebra and the Weyl reflection gates.

#include <array>
#include <string_view>

#include "twoq/linalg.hpp"

namespace twoq {

/// Coordinates [c1, c2, c3] of the Cartan factor exp(i/2 (c1 XX + c2 YY + c3 ZZ)).
using CartanCoord = std::array<double, 3>;

/// X1..X6 = i/2 {x1, y1, z1, x2, y2, z2}; X7..X15 = i/2 {xx, xy, xz, yx, yy,
/// yz, zx, zy, zz}. Zero-based: generator_basis()[0] is X1.
const std::array<CMat4, 15>& generator_basis();

/// Magic (Bell) basis matrix; local gates become real orthogonal under
/// U -> Q^dag U Q.
const CMat4& magic_basis();

CMat4 commutator(const CMat4& a, const CMat4& b);

/// B(a, b) = 8 tr(ab). Returns the real part.
double killing_form(const CMat4& a, const CMat4& b);

struct HamiltonianSplit {
  std::array<double, 6> local_coeffs{};
  std::array<double, 9> nonlocal_coeffs{};
  /// tr(H) / 4, removed before projecting.
  double identity_coeff = 0.0;
};

HamiltonianSplit split_hamiltonian(const CMat4& h,
                                   double tol = tol::kHermitian);

/// H_a = 1/2 (c1 XX + c2 YY + c3 ZZ).
CMat4 cartan_hamiltonian(const CartanCoord& c);

/// A(c) = exp(i H_a), built exactly from its diagonal magic-basis form.
Gate4 cartan_factor(const CartanCoord& c);

struct CartanTarget {
  CartanCoord c{};
  /// Local gate with k (iH) k^dag = i H_a.
  Gate4 k;
};

/// Conjugates a purely non-local Hamiltonian into the Cartan subalgebra.
/// The trace is discarded. Coordinates satisfy c1 >= c2 >= |c3|; c3 is
/// negative when no local conjugation can make all three non-negative.
CartanTarget cartan_conjugate(const CMat4& h, double tol = tol::kHermitian);

enum class Root { C3MinusC2, C2MinusC1, C1MinusC3, C2PlusC3, C1PlusC2, C1PlusC3 };

inline constexpr std::array<Root, 6> kAllRoots = {
    Root::C3MinusC2, Root::C2MinusC1, Root::C1MinusC3,
    Root::C2PlusC3,  Root::C1PlusC2,  Root::C1PlusC3};

/// Accepts "c3-c2" or "i(c3-c2)" style labels; throws UnknownRoot.
Root parse_root(std::string_view label);
std::string_view root_label(Root root);

/// k_alpha = exp(pi/2 (i/2 s_a^1 +- i/2 s_a^2)); conjugation by it reflects
/// the Cartan coordinates across the root's wall.
Gate4 weyl_reflection_gate(Root root);

/// True when Q^dag k Q is, up to a global phase, real orthogonal with
/// determinant +1.
bool is_local_gate(const Gate4& k, double tol = 1e-8);

}  // namespace twoq
