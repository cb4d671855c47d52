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

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "twoq/errors.hpp"
#include "twoq/invariants.hpp"
#include "twoq/weyl.hpp"

namespace twoq {

namespace {

constexpr double kRealTol = 1e-8;
constexpr double kMatchTol = 1e-9;

struct Candidate {
  CartanCoord c;
  int quarter_turns;  // alpha = arg(det U) / 4 + quarter_turns * pi / 2
  std::array<int, 4> order;
  std::array<double, 4> theta;
  double distance;
};

double wrap_pi(double x) {
  double r = std::remainder(x, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

// Every (global phase branch, eigenvalue ordering, 2 pi shift) with zero
// phase sum, together with its Cartan coordinates.
std::vector<Candidate> enumerate_candidates(const RVec4& theta) {
  std::vector<Candidate> out;
  for (int j = 0; j < 4; ++j) {
    std::array<int, 4> order{0, 1, 2, 3};
    do {
      std::array<double, 4> base;
      for (int k = 0; k < 4; ++k) base[k] = wrap_pi(theta(order[k]) + j * kPi);
      for (int code = 0; code < 81; ++code) {
        std::array<double, 4> t;
        int rest = code;
        double total = 0.0;
        for (int k = 0; k < 4; ++k) {
          t[k] = base[k] + 2.0 * kPi * (rest % 3 - 1);
          rest /= 3;
          total += t[k];
        }
        if (std::abs(total) > 1e-6) continue;
        // Spread the rounding residue so the phases sum to zero exactly.
        for (double& x : t) x -= total / 4.0;
        const CartanCoord c = {0.5 * (t[0] + t[1]), 0.5 * (t[1] + t[3]),
                               0.5 * (t[0] + t[3])};
        out.push_back({c, j, order, t, 0.0});
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

}  // namespace

KakDecomposition kak_decompose(const Gate4& u, double tol) {
  require_unitary(u, tol);
  const double alpha0 = std::arg(u.determinant()) / 4.0;
  const Gate4 u1 = std::exp(-kI * alpha0) * u;
  const CMat4& q = magic_basis();
  const CMat4 ub = q.adjoint() * u1 * q;
  const MSpectrum spec = m_spectrum(ub.transpose() * ub);

  std::vector<Candidate> candidates = enumerate_candidates(spec.theta);
  const CartanCoord target = canonicalize(candidates.front().c);
  for (Candidate& cand : candidates) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(cand.c[i] - target[i]));
    cand.distance = d;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.distance < b.distance;
                   });

  for (const Candidate& cand : candidates) {
    if (cand.distance > kMatchTol && &cand != &candidates.front()) break;
    RMat4 o2;
    for (int k = 0; k < 4; ++k) o2.row(k) = spec.vectors.col(cand.order[k]).transpose();
    if (o2.determinant() < 0.0) o2.row(0) *= -1.0;
    CVec4 f_conj;
    for (int k = 0; k < 4; ++k) f_conj(k) = std::exp(-0.5 * kI * cand.theta[k]);
    const Complex turn = std::exp(-0.5 * kI * kPi * static_cast<double>(cand.quarter_turns));
    const CMat4 o1 = turn * ub * o2.transpose().cast<Complex>() * f_conj.asDiagonal();
    if (o1.imag().norm() > kRealTol) continue;

    KakDecomposition out;
    out.alpha = alpha0 + 0.5 * kPi * cand.quarter_turns;
    out.coords = cand.c;
    out.a_factor = cartan_factor(cand.c);
    out.k1 = q * o1.real().cast<Complex>() * q.adjoint();
    out.k2 = q * o2.cast<Complex>() * q.adjoint();
    return out;
  }
  throw Error(ErrorCode::BranchSearchFailed,
              "no eigenvalue ordering yields a real orthogonal factor");
}

Gate4 kak_reconstruct(const KakDecomposition& d) {
  return std::exp(kI * d.alpha) * d.k1 * d.a_factor * d.k2;
}

LocalFactors factor_local(const Gate4& k) {
  if (!is_local_gate(k)) {
    throw Error(ErrorCode::NotLocal, "gate is not a tensor product");
  }
  // r((i1 j1), (i2 j2)) = k((i1 i2), (j1 j2)) has rank one for a (x) b.
  CMat4 r;
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < 2; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          r(2 * i1 + j1, 2 * i2 + j2) = k(2 * i1 + i2, 2 * j1 + j2);
        }
      }
    }
  }
  int row = 0, col = 0;
  r.cwiseAbs().maxCoeff(&row, &col);
  CMat2 a, b;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = r(2 * i + j, col);
      b(i, j) = r(row, 2 * i + j) / r(row, col);
    }
  }
  a /= std::sqrt(a.determinant());
  b /= std::sqrt(b.determinant());
  LocalFactors out;
  out.a = a;
  out.b = b;
  out.phase = std::arg((kron2(a, b).adjoint() * k).trace());
  return out;
}

}  // namespace twoq
