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

// Weyl chamber canonical coordinates and named gates.

#include <string>
#include <string_view>
#include <vector>

#include "twoq/cartan.hpp"
#include "twoq/linalg.hpp"

namespace twoq {

/// Coordinates closer than this to the base (c3 = 0) use the base
/// identification [c1, c2, 0] ~ [pi - c1, c2, 0].
inline constexpr double kBaseTol = 1e-9;

/// Largest amount by which c violates c1 >= c2 >= c3 >= 0, c1 + c2 <= pi.
double chamber_violation(const CartanCoord& c);

/// All images of c under coordinate permutations and paired sign flips,
/// each reduced into [0, pi) and deduplicated.
std::vector<CartanCoord> weyl_orbit(const CartanCoord& c);

/// The orbit representative in the chamber, with c1 <= pi/2 on the base.
CartanCoord canonicalize(const CartanCoord& c);

/// Canonical coordinates of a unitary (U(4) accepted). Throws
/// VerificationFailed if the recovered point does not reproduce G1, G2.
CartanCoord gate_coords(const Gate4& u, double tol = tol::kUnitary);

/// Controlled-U with U = exp(i (g1 X + g2 Y + g3 Z)), qubit 1 controlling.
Gate4 controlled_u(double g1, double g2, double g3);

/// identity, cnot, cz, swap, sqrtswap, sqrtswap_dag, or "cu:g" /
/// "cu:g1,g2,g3". Throws UnknownGate.
Gate4 named_gate(std::string_view name);

std::vector<std::string> named_gate_names();

}  // namespace twoq
