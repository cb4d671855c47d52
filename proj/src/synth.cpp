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

#include "twoq/synth.hpp"

#include <cmath>
#include <string>

#include "twoq/errors.hpp"
#include "twoq/invariants.hpp"

namespace twoq {

namespace {

constexpr double kVerifyTol = 1e-8;

}  // namespace

std::array<double, 3> solve_times(const CartanCoord& c, const CartanCoord& gamma,
                                  double tol_det) {
  Eigen::Matrix3d m;
  m << c[0], -c[2], c[2],
       c[1], -c[0], -c[1],
       c[2], c[1], -c[0];
  const double det = c[0] * (c[0] * c[0] - c[1] * c[2]) +
                     (c[0] + c[1]) * c[2] * c[2] + (c[0] + c[2]) * c[1] * c[1];
  if (!(det > tol_det)) {
    throw Error(ErrorCode::DegenerateHamiltonian,
                "Hamiltonian cannot generate every Cartan direction");
  }
  const Eigen::Vector3d t =
      m.fullPivLu().solve(Eigen::Vector3d(gamma[0], gamma[1], gamma[2]));
  return {t(0), t(1), t(2)};
}

std::vector<PlanStep> build_steps(const std::array<Gate4, 4>& k,
                                  const std::array<double, 3>& t) {
  std::vector<PlanStep> steps;
  Gate4 pending = k[0];
  for (int i = 0; i < 3; ++i) {
    if (std::abs(t[i]) < kTimeTol) {
      pending = k[i + 1] * pending;
      continue;
    }
    steps.push_back({PlanStep::Kind::Local, pending, 0.0});
    steps.push_back({PlanStep::Kind::Pulse, Gate4::Identity(), t[i]});
    pending = k[i + 1];
  }
  steps.push_back({PlanStep::Kind::Local, pending, 0.0});
  return steps;
}

Gate4 plan_unitary(const CircuitPlan& plan) {
  const CMat4 h = realize(plan.hamiltonian);
  Gate4 u = Gate4::Identity();
  for (const PlanStep& step : plan.steps) {
    if (step.kind == PlanStep::Kind::Local) {
      u = step.local * u;
    } else {
      u = expm_i_hermitian(h, step.duration) * u;
    }
  }
  return u;
}

double verify_plan(const CircuitPlan& plan, const Gate4& target) {
  return dist_up_to_phase(plan_unitary(plan), target);
}

CircuitPlan synthesize(const Gate4& target, const HamiltonianSpec& spec) {
  require_unitary(target);
  const CMat4 h = realize(spec);
  const CartanTarget ct = cartan_conjugate(h);
  const KakDecomposition d = kak_decompose(target);
  const std::array<double, 3> t = solve_times(ct.c, d.coords);

  const Gate4 l1 = Gate4::Identity();
  const Gate4 l2 = weyl_reflection_gate(Root::C3MinusC2) *
                   weyl_reflection_gate(Root::C1PlusC3);
  const Gate4 l3 = weyl_reflection_gate(Root::C2MinusC1) *
                   weyl_reflection_gate(Root::C3MinusC2) *
                   weyl_reflection_gate(Root::C1PlusC2);
  const Gate4& k = ct.k;
  const Gate4 kd = k.adjoint();

  CircuitPlan plan;
  plan.hamiltonian = spec;
  plan.t = t;
  plan.k[0] = kd * l1.adjoint() * d.k2;
  plan.k[1] = kd * l2.adjoint() * l1 * k;
  plan.k[2] = kd * l3.adjoint() * l2 * k;
  plan.k[3] = d.k1 * l3 * k;
  plan.steps = build_steps(plan.k, plan.t);

  // exp(iHT) is a global phase once T is a common period of the
  // eigenvalue gaps of the Cartan Hamiltonian.
  const CartanCoord& c = ct.c;
  plan.period = commensurate_period({c[2] - c[1], c[0] + c[2], c[0] - c[1]},
                                    2.0 * kPi);
  if (plan.period) {
    std::array<double, 3> shifted;
    for (int i = 0; i < 3; ++i) {
      double r = std::fmod(t[i], *plan.period);
      if (r < 0.0) r += *plan.period;
      shifted[i] = r;
    }
    plan.nonnegative_t = shifted;
  }

  const double residual = verify_plan(plan, target);
  if (!(residual < kVerifyTol)) {
    throw Error(ErrorCode::VerificationFailed,
                "synthesised circuit misses the target by " +
                    std::to_string(residual));
  }
  return plan;
}

CircuitPlan cnot_from_isotropic() {
  const Gate4 kx = kron2(std::cos(kPi / 2.0) * pauli_i() +
                             kI * std::sin(kPi / 2.0) * pauli_x(),
                         pauli_i());
  CircuitPlan plan;
  plan.hamiltonian = HamiltonianSpec::isotropic();
  plan.k = {Gate4::Identity(), kx.adjoint(), kx, Gate4::Identity()};
  plan.t = {kPi / 2.0, kPi / 2.0, 0.0};
  plan.steps = build_steps(plan.k, plan.t);
  return plan;
}

}  // namespace twoq
