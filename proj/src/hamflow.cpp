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

#include "twoq/hamflow.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "twoq/entangler.hpp"
#include "twoq/errors.hpp"
#include "twoq/weyl.hpp"

namespace twoq {

namespace {

constexpr double kRatioTol = 1e-9;
constexpr int kScanSteps = 20000;
constexpr double kCnotCheckTol = 1e-6;

struct Fraction {
  long long p;
  long long q;
};

// Best continued-fraction convergent with denominator <= max_den.
std::optional<Fraction> rational_approx(double x, long long max_den) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(r);
    if (std::abs(a_real) > 1e15) break;
    const auto a = static_cast<long long>(a_real);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (std::abs(x - static_cast<double>(p1) / q1) <=
        kRatioTol * std::max(1.0, std::abs(x))) {
      return Fraction{p1, q1};
    }
    const double frac = r - a_real;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

CMat4 josephson_matrix(double alpha, double e_l) {
  const double e_j = alpha * e_l;
  return -0.5 * e_j * (kron2(pauli_x(), pauli_i()) + kron2(pauli_i(), pauli_x())) +
         (e_j * e_j / e_l) * pauli_pair(1);
}

// alpha^2 cos(2 psi) + 1 at the alpha fixed by t and k; zero on the CNOT
// condition 2 alpha^2 cos^2(psi) = alpha^2 - 1.
double josephson_residual(int k, double t, double e_l) {
  const double odd = 2.0 * k + 1.0;
  const double alpha_sq = odd * kPi / (4.0 * t * e_l);
  const double psi = std::sqrt(1.0 + 1.0 / alpha_sq) * odd * kPi / 4.0;
  return alpha_sq * std::cos(2.0 * psi) + 1.0;
}

}  // namespace

HamiltonianSpec HamiltonianSpec::isotropic() { return {}; }

HamiltonianSpec HamiltonianSpec::xy() {
  HamiltonianSpec s;
  s.kind = HamiltonianKind::XY;
  return s;
}

HamiltonianSpec HamiltonianSpec::ising() {
  HamiltonianSpec s;
  s.kind = HamiltonianKind::Ising;
  return s;
}

HamiltonianSpec HamiltonianSpec::exchange(double jxx, double jyy, double jxy,
                                          double jyx) {
  HamiltonianSpec s;
  s.kind = HamiltonianKind::Exchange;
  s.j = {jxx, jyy, jxy, jyx};
  return s;
}

HamiltonianSpec HamiltonianSpec::josephson(double alpha, double e_l) {
  HamiltonianSpec s;
  s.kind = HamiltonianKind::Josephson;
  s.alpha = alpha;
  s.e_l = e_l;
  return s;
}

HamiltonianSpec HamiltonianSpec::custom(const CMat4& h) {
  HamiltonianSpec s;
  s.kind = HamiltonianKind::Custom;
  s.matrix = h;
  return s;
}

std::string_view kind_name(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::Isotropic:
      return "isotropic";
    case HamiltonianKind::XY:
      return "xy";
    case HamiltonianKind::Ising:
      return "ising";
    case HamiltonianKind::Exchange:
      return "exchange";
    case HamiltonianKind::Josephson:
      return "josephson";
    case HamiltonianKind::Custom:
      return "custom";
  }
  return "";
}

CMat4 realize(const HamiltonianSpec& spec) {
  const CMat4 xx = pauli_pair(0), yy = pauli_pair(1), zz = pauli_pair(2);
  switch (spec.kind) {
    case HamiltonianKind::Isotropic:
      return 0.25 * (xx + yy + zz);
    case HamiltonianKind::XY:
      return 0.25 * (xx + yy);
    case HamiltonianKind::Ising:
      return 0.25 * yy;
    case HamiltonianKind::Exchange: {
      for (double j : spec.j) {
        if (!std::isfinite(j)) {
          throw Error(ErrorCode::InvalidSpec, "exchange couplings must be finite");
        }
      }
      const CMat4 xy = kron2(pauli_x(), pauli_y());
      const CMat4 yx = kron2(pauli_y(), pauli_x());
      return 0.5 * (spec.j[0] * xx + spec.j[1] * yy + spec.j[2] * xy +
                    spec.j[3] * yx);
    }
    case HamiltonianKind::Josephson:
      if (!std::isfinite(spec.alpha) || spec.alpha == 0.0 ||
          !std::isfinite(spec.e_l) || spec.e_l <= 0.0) {
        throw Error(ErrorCode::InvalidSpec,
                    "josephson needs alpha != 0 and E_L > 0");
      }
      return josephson_matrix(spec.alpha, spec.e_l);
    case HamiltonianKind::Custom:
      if (!spec.matrix.allFinite() || !is_hermitian(spec.matrix)) {
        throw Error(ErrorCode::InvalidSpec, "custom Hamiltonian is not Hermitian");
      }
      return spec.matrix;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown Hamiltonian kind");
}

std::vector<TrajectorySample> trajectory(const HamiltonianSpec& spec,
                                         const std::vector<double>& t_grid,
                                         int threads) {
  const CMat4 h = realize(spec);
  for (double t : t_grid) {
    if (!std::isfinite(t)) {
      throw Error(ErrorCode::InvalidParams, "trajectory grid must be finite");
    }
  }
  std::vector<TrajectorySample> out(t_grid.size());
  auto sample = [&](std::size_t i) {
    const Gate4 u = expm_i_hermitian(h, t_grid[i]);
    TrajectorySample& s = out[i];
    s.t = t_grid[i];
    s.coords = gate_coords(u);
    const LocalInvariants inv = local_invariants(u);
    s.g1 = inv.g1;
    s.g2 = inv.g2;
    s.is_pe = pe_from_coords(s.coords);
  };
  const int workers = std::max(1, threads);
  if (workers == 1 || t_grid.size() < 2) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) sample(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < t_grid.size(); i = next++) {
      try {
        sample(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

CartanCoord exchange_coords(double jxx, double jyy, double jxy, double jyx) {
  const double r1 = std::hypot(jxx + jyy, jxy - jyx);
  const double r2 = std::hypot(jxx - jyy, jxy + jyx);
  return {0.5 * (r1 + r2), 0.5 * std::abs(r1 - r2), 0.0};
}

LocalInvariants closed_form_invariants(HamiltonianKind kind, double t) {
  LocalInvariants out;
  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  switch (kind) {
    case HamiltonianKind::Isotropic: {
      const Complex z(c * c * c, s * s * s);
      out.g1 = z * z;
      out.g2 = 3.0 * std::cos(t);
      return out;
    }
    case HamiltonianKind::XY:
      out.g1 = c * c * c * c;
      out.g2 = 1.0 + 2.0 * std::cos(t);
      return out;
    case HamiltonianKind::Ising:
      out.g1 = c * c;
      out.g2 = 2.0 + std::cos(t);
      return out;
    default:
      throw Error(ErrorCode::UnsupportedKind,
                  "no closed form for kind " + std::string(kind_name(kind)));
  }
}

LocalInvariants josephson_invariants(double alpha, double e_l, double t) {
  if (!std::isfinite(alpha) || alpha == 0.0 || !std::isfinite(e_l) || e_l <= 0.0) {
    throw Error(ErrorCode::InvalidParams, "josephson needs alpha != 0 and E_L > 0");
  }
  const double a2 = alpha * alpha;
  const double x = std::cos(a2 * e_l * t);
  const double y = std::cos(std::sqrt(a2 + 1.0) * alpha * e_l * t);
  const double x2 = x * x, y2 = y * y;
  const double g1 = a2 * (x2 + y2 - 1.0) + x2;
  LocalInvariants out;
  out.g1 = g1 * g1 / ((1.0 + a2) * (1.0 + a2));
  out.g2 = (3.0 * a2 - 1.0 - 4.0 * y2 * a2 + 8.0 * a2 * x2 * y2 + 4.0 * x2 -
            4.0 * x2 * a2) /
           (1.0 + a2);
  return out;
}

JosephsonCnot josephson_cnot_min_time(double e_l, int k_max) {
  if (!std::isfinite(e_l) || e_l <= 0.0) {
    throw Error(ErrorCode::InvalidParams, "E_L must be positive");
  }
  std::optional<JosephsonCnot> best;
  for (int k = 0; k <= k_max; ++k) {
    const double odd = 2.0 * k + 1.0;
    // alpha >= 1 bounds t from above.
    const double t_hi = odd * kPi / (4.0 * e_l);
    if (best && best->t < 1e-6 * t_hi) break;
    const double t_lo = 1e-6 * t_hi;
    double prev_t = t_lo;
    double prev_h = josephson_residual(k, prev_t, e_l);
    for (int step = 1; step <= kScanSteps; ++step) {
      const double t = t_lo + (t_hi - t_lo) * step / kScanSteps;
      if (best && prev_t >= best->t) break;
      const double h = josephson_residual(k, t, e_l);
      if ((prev_h > 0.0) != (h > 0.0)) {
        double lo = prev_t, hi = t, h_lo = prev_h;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double h_mid = josephson_residual(k, mid, e_l);
          if ((h_mid > 0.0) == (h_lo > 0.0)) {
            lo = mid, h_lo = h_mid;
          } else {
            hi = mid;
          }
        }
        const double root = 0.5 * (lo + hi);
        const double alpha = std::sqrt(odd * kPi / (4.0 * root * e_l));
        const LocalInvariants inv = local_invariants(
            expm_i_hermitian(josephson_matrix(alpha, e_l), root));
        if (std::abs(inv.g1) <= kCnotCheckTol &&
            std::abs(inv.g2 - 1.0) <= kCnotCheckTol) {
          if (!best || root < best->t) best = JosephsonCnot{alpha, root, k};
          break;
        }
      }
      prev_t = t;
      prev_h = h;
    }
  }
  if (!best) {
    throw Error(ErrorCode::NoSolutionInRange,
                "no CNOT solution for k up to " + std::to_string(k_max));
  }
  return *best;
}

std::optional<double> commensurate_period(const std::vector<double>& rates,
                                          double unit, long long max_den) {
  double ref = 0.0;
  for (double r : rates) {
    if (std::abs(r) > std::abs(ref)) ref = r;
  }
  if (ref == 0.0) return std::nullopt;
  long long lcm = 1;
  for (double r : rates) {
    const std::optional<Fraction> f = rational_approx(r / ref, max_den);
    if (!f) return std::nullopt;
    const long long q = f->q / std::gcd(std::llabs(f->p), f->q);
    lcm = std::lcm(lcm, q);
    if (lcm > max_den) return std::nullopt;
  }
  return unit * static_cast<double>(lcm) / std::abs(ref);
}

std::optional<double> torus_loop_period(const CartanCoord& c, long long max_den) {
  return commensurate_period({c[0], c[1], c[2]}, kPi, max_den);
}

}  // namespace twoq
