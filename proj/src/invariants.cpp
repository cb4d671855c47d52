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

#include "twoq/invariants.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "twoq/errors.hpp"

namespace twoq {

namespace {

// Mixing weights for Re(m) + lambda Im(m). Irrational-looking values keep
// accidental eigenvalue collisions unlikely; the next one is tried on failure.
constexpr std::array<double, 8> kLambdas = {0.42671, 1.3113,  -0.7753, 2.2361,
                                            -1.7321, 0.31831, 3.1416,  -2.7183};
constexpr double kDiagonalTol = 1e-11;
constexpr double kAcceptTol = 1e-7;

double off_diagonal(const CMat4& d) {
  double sum = 0.0;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      if (p != q) sum += std::norm(d(p, q));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

void require_unitary(const Gate4& u, double tol) {
  if (!u.allFinite() || !is_unitary(u, tol)) {
    throw Error(ErrorCode::NotUnitary, "matrix is not unitary");
  }
}

Gate4 magic_transform(const Gate4& u, double tol) {
  require_unitary(u, tol);
  const CMat4& q = magic_basis();
  return q.adjoint() * u * q;
}

CMat4 m_matrix(const Gate4& u, double tol) {
  const Gate4 ub = magic_transform(u, tol);
  return ub.transpose() * ub;
}

MSpectrum m_spectrum(const CMat4& m) {
  const CMat4 sym = 0.5 * (m + m.transpose());
  const RMat4 re = sym.real();
  const RMat4 im = sym.imag();
  double best_residual = std::numeric_limits<double>::infinity();
  RMat4 best;
  for (double lambda : kLambdas) {
    const RealEigen eig = eig_real_symmetric(re + lambda * im, 1e-6);
    const CMat4 p = eig.vectors.cast<Complex>();
    const double residual = off_diagonal(p.transpose() * sym * p);
    if (residual < best_residual) {
      best_residual = residual;
      best = eig.vectors;
    }
    if (residual < kDiagonalTol) break;
  }
  if (best_residual > kAcceptTol) {
    throw Error(ErrorCode::NoConvergence,
                "could not diagonalise Re(m) and Im(m) simultaneously");
  }
  const CMat4 p = best.cast<Complex>();
  const CMat4 d = p.transpose() * sym * p;
  MSpectrum out;
  out.vectors = best;
  for (int k = 0; k < 4; ++k) out.theta(k) = std::arg(d(k, k));
  return out;
}

LocalInvariants local_invariants(const Gate4& u, double tol) {
  const CMat4 m = m_matrix(u, tol);
  const Complex tr = m.trace();
  const Complex tr_sq = (m * m).trace();
  const Complex det = u.determinant();
  LocalInvariants out;
  out.g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - tr_sq) / (4.0 * det);
  out.g2 = g2.real();
  out.g2_imag_residual = g2.imag();
  return out;
}

LocalInvariants invariants_from_coords(const CartanCoord& c) {
  double cc = 1.0, ss = 1.0, s2 = 1.0, c2 = 1.0;
  for (double x : c) {
    cc *= std::cos(x) * std::cos(x);
    ss *= std::sin(x) * std::sin(x);
    s2 *= std::sin(2.0 * x);
    c2 *= std::cos(2.0 * x);
  }
  LocalInvariants out;
  out.g1 = Complex(cc - ss, 0.25 * s2);
  out.g2 = 4.0 * cc - 4.0 * ss - c2;
  return out;
}

bool locally_equivalent(const Gate4& u, const Gate4& v, double tol) {
  const LocalInvariants a = local_invariants(u);
  const LocalInvariants b = local_invariants(v);
  return std::abs(a.g1 - b.g1) <= tol && std::abs(a.g2 - b.g2) <= tol;
}

}  // namespace twoq
