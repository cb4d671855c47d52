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

#include "twoq/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <type_traits>

#include "twoq/errors.hpp"

namespace twoq {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTarget = 1e-13;

template <typename Scalar>
Scalar conj_of(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Complex>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <typename Scalar>
double off_diagonal_norm(const Eigen::Matrix<Scalar, 4, 4>& a) {
  double sum = 0.0;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      if (p != q) sum += std::norm(a(p, q));
    }
  }
  return std::sqrt(sum);
}

// Cyclic Jacobi on a Hermitian (or real symmetric) 4x4 matrix. On return `a`
// is diagonal and a_in = v * a * v^dag.
template <typename Scalar>
void jacobi_sweeps(Eigen::Matrix<Scalar, 4, 4>& a,
                   Eigen::Matrix<Scalar, 4, 4>& v) {
  v.setIdentity();
  const double target = kOffDiagonalTarget * std::max(1.0, a.norm());
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < target) return;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Scalar apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Scalar phase = apq / mag;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Plane rotation in (p, q), carrying the phase of a_pq.
        const Scalar gpp = c;
        const Scalar gpq = s * phase;
        const Scalar gqp = -s * conj_of(phase);
        const Scalar gqq = c;
        for (int k = 0; k < 4; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (int k = 0; k < 4; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = conj_of(gpp) * apk + conj_of(gqp) * aqk;
          a(q, k) = conj_of(gpq) * apk + conj_of(gqq) * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        for (int k = 0; k < 4; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  if (off_diagonal_norm(a) >= target) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi eigensolver did not converge in 100 sweeps");
  }
}

template <typename Scalar>
std::pair<RVec4, Eigen::Matrix<Scalar, 4, 4>> sorted_eigen(
    Eigen::Matrix<Scalar, 4, 4> a) {
  Eigen::Matrix<Scalar, 4, 4> v;
  jacobi_sweeps(a, v);
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::real(a(x, x)) > std::real(a(y, y));
  });
  RVec4 values;
  Eigen::Matrix<Scalar, 4, 4> vectors;
  for (int j = 0; j < 4; ++j) {
    values(j) = std::real(a(order[j], order[j]));
    vectors.col(j) = v.col(order[j]);
  }
  return {values, vectors};
}

CMat2 make2(Complex a, Complex b, Complex c, Complex d) {
  CMat2 m;
  m << a, b, c, d;
  return m;
}

}  // namespace

const CMat2& pauli_i() {
  static const CMat2 m = CMat2::Identity();
  return m;
}

const CMat2& pauli_x() {
  static const CMat2 m = make2(0.0, 1.0, 1.0, 0.0);
  return m;
}

const CMat2& pauli_y() {
  static const CMat2 m = make2(0.0, -kI, kI, 0.0);
  return m;
}

const CMat2& pauli_z() {
  static const CMat2 m = make2(1.0, 0.0, 0.0, -1.0);
  return m;
}

CMat4 kron2(const CMat2& a, const CMat2& b) {
  CMat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

CMat4 pauli_pair(int axis) {
  switch (axis) {
    case 0:
      return kron2(pauli_x(), pauli_x());
    case 1:
      return kron2(pauli_y(), pauli_y());
    default:
      return kron2(pauli_z(), pauli_z());
  }
}

bool is_unitary(const CMat4& u, double tol) {
  return (u.adjoint() * u - CMat4::Identity()).norm() <= tol;
}

bool is_hermitian(const CMat4& h, double tol) {
  return (h - h.adjoint()).norm() <= tol * std::max(1.0, h.norm());
}

RealEigen eig_real_symmetric(const RMat4& s, double tol) {
  if ((s - s.transpose()).norm() > tol * std::max(1.0, s.norm())) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  }
  const RMat4 sym = 0.5 * (s + s.transpose());
  auto [values, vectors] = sorted_eigen<double>(sym);
  if (vectors.determinant() < 0.0) vectors.col(3) *= -1.0;
  return {values, vectors};
}

HermitianEigen eig_hermitian(const CMat4& h, double tol) {
  if (!is_hermitian(h, tol)) {
    throw Error(ErrorCode::NonHermitian, "matrix is not Hermitian");
  }
  const CMat4 herm = 0.5 * (h + h.adjoint());
  auto [values, vectors] = sorted_eigen<Complex>(herm);
  return {values, vectors};
}

CMat4 expm_i_hermitian(const CMat4& h, double t, double tol) {
  const HermitianEigen e = eig_hermitian(h, tol);
  CVec4 phases;
  for (int j = 0; j < 4; ++j) phases(j) = std::exp(kI * (e.values(j) * t));
  return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

double dist_up_to_phase(const CMat4& u, const CMat4& v) {
  // Direct form: the closed expression sqrt(8 - 2|tr|) cancels
  // catastrophically near zero.
  const Complex overlap = (v.adjoint() * u).trace();
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
  return (u - phase * v).norm();
}

}  // namespace twoq
