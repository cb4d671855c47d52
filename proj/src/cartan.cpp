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

#include "twoq/cartan.hpp"

#include <cmath>
#include <string>

#include "twoq/errors.hpp"

namespace twoq {

namespace {

const CMat2& pauli(int axis) {
  switch (axis) {
    case 0:
      return pauli_x();
    case 1:
      return pauli_y();
    default:
      return pauli_z();
  }
}

// exp(i theta sigma_axis) for a single qubit.
CMat2 pauli_rotation(int axis, double theta) {
  return std::cos(theta) * pauli_i() + kI * std::sin(theta) * pauli(axis);
}

}  // namespace

const std::array<CMat4, 15>& generator_basis() {
  static const std::array<CMat4, 15> basis = [] {
    std::array<CMat4, 15> out;
    const Complex half_i = 0.5 * kI;
    for (int a = 0; a < 3; ++a) {
      out[a] = half_i * kron2(pauli(a), pauli_i());
      out[3 + a] = half_i * kron2(pauli_i(), pauli(a));
    }
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        out[6 + 3 * a + b] = half_i * kron2(pauli(a), pauli(b));
      }
    }
    return out;
  }();
  return basis;
}

const CMat4& magic_basis() {
  static const CMat4 q = [] {
    const double r = 1.0 / std::sqrt(2.0);
    CMat4 m;
    m << r, 0, 0, kI * r,
         0, kI * r, r, 0,
         0, kI * r, -r, 0,
         r, 0, 0, -kI * r;
    return m;
  }();
  return q;
}

CMat4 commutator(const CMat4& a, const CMat4& b) { return a * b - b * a; }

double killing_form(const CMat4& a, const CMat4& b) {
  return 8.0 * (a * b).trace().real();
}

HamiltonianSplit split_hamiltonian(const CMat4& h, double tol) {
  if (!is_hermitian(h, tol)) {
    throw Error(ErrorCode::NonHermitian, "Hamiltonian is not Hermitian");
  }
  HamiltonianSplit split;
  split.identity_coeff = h.trace().real() / 4.0;
  const CMat4 ih = kI * (h - split.identity_coeff * CMat4::Identity());
  const auto& basis = generator_basis();
  for (int j = 0; j < 15; ++j) {
    const double coeff = -(basis[j] * ih).trace().real();
    if (j < 6) {
      split.local_coeffs[j] = coeff;
    } else {
      split.nonlocal_coeffs[j - 6] = coeff;
    }
  }
  return split;
}

CMat4 cartan_hamiltonian(const CartanCoord& c) {
  return 0.5 * (c[0] * pauli_pair(0) + c[1] * pauli_pair(1) +
                c[2] * pauli_pair(2));
}

Gate4 cartan_factor(const CartanCoord& c) {
  const double c1 = c[0], c2 = c[1], c3 = c[2];
  CVec4 f;
  f << std::exp(0.5 * kI * (c1 - c2 + c3)), std::exp(0.5 * kI * (c1 + c2 - c3)),
      std::exp(-0.5 * kI * (c1 + c2 + c3)), std::exp(0.5 * kI * (-c1 + c2 + c3));
  const CMat4& q = magic_basis();
  return q * f.asDiagonal() * q.adjoint();
}

CartanTarget cartan_conjugate(const CMat4& h, double tol) {
  const HamiltonianSplit split = split_hamiltonian(h, tol);
  const double scale = std::max(1.0, h.norm());
  for (double coeff : split.local_coeffs) {
    if (std::abs(coeff) > tol * scale) {
      throw Error(ErrorCode::NotNonlocal,
                  "Hamiltonian has a non-zero local part");
    }
  }
  const CMat4& q = magic_basis();
  const CMat4 traceless = h - split.identity_coeff * CMat4::Identity();
  const RMat4 s = (q.adjoint() * traceless * q).real();
  const RealEigen eig = eig_real_symmetric(0.5 * (s + s.transpose()));
  const RVec4& mu = eig.values;

  CartanTarget out;
  out.c = {mu(0) + mu(1), mu(0) + mu(2), mu(1) + mu(2)};
  // Diagonal of Q^dag H_a Q is (mu2, mu1, mu4, mu3) for these coordinates.
  // Two column swaps keep det = +1.
  RMat4 w;
  w.col(0) = eig.vectors.col(1);
  w.col(1) = eig.vectors.col(0);
  w.col(2) = eig.vectors.col(3);
  w.col(3) = eig.vectors.col(2);
  const CMat4 o = w.transpose().cast<Complex>();
  out.k = q * o * q.adjoint();
  return out;
}

Root parse_root(std::string_view label) {
  std::string s(label);
  if (s.size() > 3 && s.rfind("i(", 0) == 0 && s.back() == ')') {
    s = s.substr(2, s.size() - 3);
  }
  for (Root r : kAllRoots) {
    if (s == root_label(r)) return r;
  }
  throw Error(ErrorCode::UnknownRoot, "unknown root label: " + std::string(label));
}

std::string_view root_label(Root root) {
  switch (root) {
    case Root::C3MinusC2:
      return "c3-c2";
    case Root::C2MinusC1:
      return "c2-c1";
    case Root::C1MinusC3:
      return "c1-c3";
    case Root::C2PlusC3:
      return "c2+c3";
    case Root::C1PlusC2:
      return "c1+c2";
    case Root::C1PlusC3:
      return "c1+c3";
  }
  return "";
}

Gate4 weyl_reflection_gate(Root root) {
  constexpr double kQuarter = kPi / 4.0;
  int axis = 0;
  double sign = 1.0;
  switch (root) {
    case Root::C3MinusC2:
      axis = 0;
      break;
    case Root::C2MinusC1:
      axis = 2;
      break;
    case Root::C1MinusC3:
      axis = 1;
      break;
    case Root::C2PlusC3:
      axis = 0;
      sign = -1.0;
      break;
    case Root::C1PlusC2:
      axis = 2;
      sign = -1.0;
      break;
    case Root::C1PlusC3:
      axis = 1;
      sign = -1.0;
      break;
  }
  return kron2(pauli_rotation(axis, kQuarter),
               pauli_rotation(axis, sign * kQuarter));
}

bool is_local_gate(const Gate4& k, double tol) {
  const CMat4& q = magic_basis();
  const CMat4 m = q.adjoint() * k * q;
  const Complex s = m.cwiseProduct(m).sum();
  if (std::abs(s) < 1.0) return false;
  const CMat4 r = std::exp(-0.5 * kI * std::arg(s)) * m;
  if (r.imag().norm() > tol) return false;
  const RMat4 o = r.real();
  if ((o.transpose() * o - RMat4::Identity()).norm() > tol) return false;
  return o.determinant() > 0.0;
}

}  // namespace twoq
