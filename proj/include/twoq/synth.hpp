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

// Three-pulse circuit synthesis: any two-qubit target from a purely
// non-local Hamiltonian interleaved with local gates.

#include <array>
#include <optional>
#include <vector>

#include "twoq/cartan.hpp"
#include "twoq/hamflow.hpp"
#include "twoq/kak.hpp"
#include "twoq/linalg.hpp"

namespace twoq {

/// Durations below this are dropped and their neighbouring locals merged.
inline constexpr double kTimeTol = 1e-10;

struct PlanStep {
  enum class Kind { Local, Pulse };
  Kind kind = Kind::Local;
  Gate4 local = Gate4::Identity();
  double duration = 0.0;
};

/// Realises k3 U(t3) k2 U(t2) k1 U(t1) k0 with U(t) = exp(iHt).
struct CircuitPlan {
  std::array<Gate4, 4> k;
  std::array<double, 3> t{};
  HamiltonianSpec hamiltonian;
  /// Application order (first element acts first) after elision.
  std::vector<PlanStep> steps;
  /// Durations shifted into [0, period) when exp(iHt) is periodic.
  std::optional<std::array<double, 3>> nonnegative_t;
  std::optional<double> period;
};

/// Solves [[c1, -c3, c3], [c2, -c1, -c2], [c3, c2, -c1]] t = gamma. Throws
/// DegenerateHamiltonian when the determinant is at most tol_det.
std::array<double, 3> solve_times(const CartanCoord& c, const CartanCoord& gamma,
                                  double tol_det = 1e-12);

/// Builds `steps` from `k` and `t`, dropping durations below kTimeTol.
std::vector<PlanStep> build_steps(const std::array<Gate4, 4>& k,
                                  const std::array<double, 3>& t);

/// The unitary of `steps`.
Gate4 plan_unitary(const CircuitPlan& plan);

/// dist_up_to_phase(plan_unitary(plan), target).
double verify_plan(const CircuitPlan& plan, const Gate4& target);

/// Throws NotNonlocal, DegenerateHamiltonian or VerificationFailed.
CircuitPlan synthesize(const Gate4& target, const HamiltonianSpec& spec);

/// exp(iH pi/2) followed by k_x^dag, exp(iH pi/2), k_x with the isotropic
/// exchange H and k_x = exp(i pi/2 X1).
CircuitPlan cnot_from_isotropic();

}  // namespace twoq
