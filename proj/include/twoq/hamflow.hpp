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

// Flows generated by two-qubit Hamiltonians: named interactions,
// trajectories of canonical coordinates, closed-form invariant curves and
// the Josephson minimum-time CNOT.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "twoq/cartan.hpp"
#include "twoq/invariants.hpp"
#include "twoq/linalg.hpp"

namespace twoq {

enum class HamiltonianKind { Isotropic, XY, Ising, Exchange, Josephson, Custom };

struct HamiltonianSpec {
  HamiltonianKind kind = HamiltonianKind::Isotropic;
  /// Jxx, Jyy, Jxy, Jyx for Exchange.
  std::array<double, 4> j{};
  /// E_J / E_L and E_L for Josephson.
  double alpha = 1.0;
  double e_l = 1.0;
  /// Hermitian matrix for Custom.
  CMat4 matrix = CMat4::Zero();

  static HamiltonianSpec isotropic();
  static HamiltonianSpec xy();
  static HamiltonianSpec ising();
  static HamiltonianSpec exchange(double jxx, double jyy, double jxy, double jyx);
  static HamiltonianSpec josephson(double alpha, double e_l);
  static HamiltonianSpec custom(const CMat4& h);
};

std::string_view kind_name(HamiltonianKind kind);

/// The Hamiltonian matrix. Throws InvalidSpec.
CMat4 realize(const HamiltonianSpec& spec);

struct TrajectorySample {
  double t = 0.0;
  CartanCoord coords{};
  Complex g1;
  double g2 = 0.0;
  bool is_pe = false;
};

/// Canonical coordinates and invariants of exp(iHt) on the grid. Output
/// order follows the grid for any thread count.
std::vector<TrajectorySample> trajectory(const HamiltonianSpec& spec,
                                         const std::vector<double>& t_grid,
                                         int threads = 1);

/// Closed-form coordinates (c1, c2, 0) of the generalised exchange
/// 1/2 (Jxx XX + Jyy YY + Jxy XY + Jyx YX).
CartanCoord exchange_coords(double jxx, double jyy, double jxy, double jyx);

/// G1(t), G2(t) for Isotropic, XY and Ising. Throws UnsupportedKind.
LocalInvariants closed_form_invariants(HamiltonianKind kind, double t);

/// G1(t), G2(t) of the Josephson Hamiltonian. Throws InvalidParams.
LocalInvariants josephson_invariants(double alpha, double e_l, double t);

struct JosephsonCnot {
  double alpha = 0.0;
  double t = 0.0;
  int k = 0;
};

/// Smallest t reaching the CNOT class over k = 0..k_max. Throws
/// NoSolutionInRange.
JosephsonCnot josephson_cnot_min_time(double e_l, int k_max = 64);

/// Smallest T > 0 with T * r in unit * Z for every rate r, when all rate
/// ratios are rational with denominators up to max_den. Heuristic: ratios
/// are matched to 1e-9 relative accuracy.
std::optional<double> commensurate_period(const std::vector<double>& rates,
                                          double unit,
                                          long long max_den = 1000000);

/// Period after which the flow t * c closes into a loop on the 3-torus.
std::optional<double> torus_loop_period(const CartanCoord& c,
                                        long long max_den = 1000000);

}  // namespace twoq
