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

#include "twoq/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "twoq/errors.hpp"
#include "twoq/invariants.hpp"

namespace twoq {

namespace {

constexpr double kWrapTol = 1e-12;
constexpr double kDedupTol = 1e-12;
constexpr double kRoundTripTol = 1e-8;

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

constexpr std::array<std::array<double, 3>, 4> kEvenSigns = {{
    {1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};

// Reduces x into [0, pi); values within kWrapTol of pi wrap to ~0.
double reduce_mod_pi(double x) {
  double r = std::fmod(x, kPi);
  if (r < 0.0) r += kPi;
  if (r > kPi - kWrapTol) r -= kPi;
  return r;
}

std::vector<CartanCoord> raw_orbit(const CartanCoord& c) {
  std::vector<CartanCoord> out;
  out.reserve(24);
  for (const auto& perm : kPermutations) {
    for (const auto& sign : kEvenSigns) {
      CartanCoord w;
      for (int i = 0; i < 3; ++i) w[i] = reduce_mod_pi(sign[i] * c[perm[i]]);
      out.push_back(w);
    }
  }
  return out;
}

double max_abs_diff(const CartanCoord& a, const CartanCoord& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool invariants_match(const LocalInvariants& a, const LocalInvariants& b) {
  return std::abs(a.g1 - b.g1) <= kRoundTripTol &&
         std::abs(a.g2 - b.g2) <= kRoundTripTol;
}

CartanCoord coords_from_phases(const std::array<double, 4>& t) {
  return {0.5 * (t[0] + t[1]), 0.5 * (t[1] + t[3]), 0.5 * (t[0] + t[3])};
}

Gate4 permutation_gate(const std::array<int, 4>& image) {
  Gate4 g = Gate4::Zero();
  for (int j = 0; j < 4; ++j) g(image[j], j) = 1.0;
  return g;
}

}  // namespace

double chamber_violation(const CartanCoord& c) {
  return std::max({0.0, c[1] - c[0], c[2] - c[1], -c[2], c[0] + c[1] - kPi});
}

std::vector<CartanCoord> weyl_orbit(const CartanCoord& c) {
  std::vector<CartanCoord> out;
  for (const CartanCoord& w : raw_orbit(c)) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& v) {
      return max_abs_diff(v, w) <= kDedupTol;
    });
    if (!seen) out.push_back(w);
  }
  return out;
}

CartanCoord canonicalize(const CartanCoord& c) {
  const std::vector<CartanCoord> orbit = raw_orbit(c);
  double best_violation = chamber_violation(orbit.front());
  for (const CartanCoord& w : orbit) {
    best_violation = std::min(best_violation, chamber_violation(w));
  }
  CartanCoord best{};
  bool found = false;
  for (const CartanCoord& w : orbit) {
    if (chamber_violation(w) > best_violation + kDedupTol) continue;
    if (!found || w < best) {
      best = w;
      found = true;
    }
  }
  if (best[2] < kBaseTol && best[0] > kPi / 2.0) {
    best[0] = kPi - best[0];
    std::sort(best.begin(), best.end(), std::greater<double>());
  }
  // Rounding dust below 1e-14 is not a meaningful angle.
  for (double& x : best) x = x < 1e-14 ? 0.0 : x;
  return best;
}

CartanCoord gate_coords(const Gate4& u, double tol) {
  require_unitary(u, tol);
  const double alpha = std::arg(u.determinant()) / 4.0;
  const Gate4 u1 = std::exp(-kI * alpha) * u;
  const MSpectrum spec = m_spectrum(m_matrix(u1, tol));
  const LocalInvariants target = local_invariants(u, tol);

  std::array<double, 4> theta;
  for (int k = 0; k < 4; ++k) theta[k] = spec.theta(k);
  const double sum = theta[0] + theta[1] + theta[2] + theta[3];
  theta[3] -= 2.0 * kPi * std::round(sum / (2.0 * kPi));
  CartanCoord c = canonicalize(coords_from_phases(theta));
  if (invariants_match(invariants_from_coords(c), target)) return c;

  // Exhaustive fallback over orderings and 2 pi branches.
  std::array<int, 4> order{0, 1, 2, 3};
  do {
    for (int code = 0; code < 81; ++code) {
      std::array<double, 4> t;
      int rest = code;
      double total = 0.0;
      for (int k = 0; k < 4; ++k) {
        t[k] = spec.theta(order[k]) + 2.0 * kPi * (rest % 3 - 1);
        rest /= 3;
        total += t[k];
      }
      if (std::abs(total) > 1e-6) continue;
      c = canonicalize(coords_from_phases(t));
      if (invariants_match(invariants_from_coords(c), target)) return c;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  throw Error(ErrorCode::VerificationFailed,
              "no branch of the m spectrum reproduces the local invariants");
}

Gate4 controlled_u(double g1, double g2, double g3) {
  const double gamma = std::sqrt(g1 * g1 + g2 * g2 + g3 * g3);
  CMat2 rot = std::cos(gamma) * pauli_i();
  if (gamma > 0.0) {
    rot += kI * (std::sin(gamma) / gamma) *
           (g1 * pauli_x() + g2 * pauli_y() + g3 * pauli_z());
  }
  Gate4 out = Gate4::Zero();
  out.block<2, 2>(0, 0) = pauli_i();
  out.block<2, 2>(2, 2) = rot;
  return out;
}

Gate4 named_gate(std::string_view name) {
  const Gate4 swap = permutation_gate({0, 2, 1, 3});
  if (name == "identity") return Gate4::Identity();
  if (name == "cnot") return permutation_gate({0, 1, 3, 2});
  if (name == "cz") {
    Gate4 g = Gate4::Identity();
    g(3, 3) = -1.0;
    return g;
  }
  if (name == "swap") return swap;
  if (name == "sqrtswap") {
    return 0.5 * (Complex(1, -1) * Gate4::Identity() + Complex(1, 1) * swap);
  }
  if (name == "sqrtswap_dag") {
    return 0.5 * (Complex(1, 1) * Gate4::Identity() + Complex(1, -1) * swap);
  }
  if (name.rfind("cu:", 0) == 0) {
    std::vector<double> g;
    std::stringstream ss{std::string(name.substr(3))};
    std::string item;
    bool ok = true;
    while (ok && std::getline(ss, item, ',')) {
      char* end = nullptr;
      g.push_back(std::strtod(item.c_str(), &end));
      ok = !item.empty() && *end == '\0' && std::isfinite(g.back());
    }
    if (!ok) g.clear();
    if (g.size() == 1) return controlled_u(g[0], 0.0, 0.0);
    if (g.size() == 3) return controlled_u(g[0], g[1], g[2]);
  }
  throw Error(ErrorCode::UnknownGate, "unknown gate: " + std::string(name));
}

std::vector<std::string> named_gate_names() {
  return {"identity", "cnot",         "cz",
          "swap",     "sqrtswap",     "sqrtswap_dag"};
}

}  // namespace twoq
