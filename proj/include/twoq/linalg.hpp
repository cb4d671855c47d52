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

// Dense complex linear algebra for fixed 2x2 and 4x4 matrices.

#include <complex>

#include <Eigen/Dense>

namespace twoq {

using Complex = std::complex<double>;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;
using CVec4 = Eigen::Vector4cd;
using RMat4 = Eigen::Matrix4d;
using RVec4 = Eigen::Vector4d;

/// A two-qubit operation. Qubit 1 is the most significant index, so
/// kron2(a, b) applies `a` to qubit 1 and `b` to qubit 2.
using Gate4 = CMat4;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

namespace tol {
inline constexpr double kUnitary = 1e-9;
inline constexpr double kHermitian = 1e-9;
inline constexpr double kSymmetric = 1e-9;
inline constexpr double kEig = 1e-10;
}  // namespace tol

const CMat2& pauli_i();
const CMat2& pauli_x();
const CMat2& pauli_y();
const CMat2& pauli_z();

CMat4 kron2(const CMat2& a, const CMat2& b);

/// sigma_a (x) sigma_a for a in {0: x, 1: y, 2: z}.
CMat4 pauli_pair(int axis);

bool is_unitary(const CMat4& u, double tol = tol::kUnitary);
bool is_hermitian(const CMat4& h, double tol = tol::kHermitian);

/// Eigenvalues sorted descending; columns of `vectors` are the matching
/// eigenvectors. For the real symmetric solver det(vectors) == +1.
struct RealEigen {
  RVec4 values;
  RMat4 vectors;
};

struct HermitianEigen {
  RVec4 values;
  CMat4 vectors;
};

/// Cyclic Jacobi; throws NotSymmetric when ||S - S^T||_F > tol.
RealEigen eig_real_symmetric(const RMat4& s, double tol = tol::kSymmetric);

/// Cyclic complex Jacobi; throws NonHermitian when ||H - H^dag||_F > tol.
HermitianEigen eig_hermitian(const CMat4& h, double tol = tol::kHermitian);

/// exp(i H t) through the Hermitian eigendecomposition of H.
CMat4 expm_i_hermitian(const CMat4& h, double t,
                       double tol = tol::kHermitian);

/// Frobenius distance between u and v minimised over a global phase.
/// Equals sqrt(8 - 2|tr(u^dag v)|) for unitaries.
double dist_up_to_phase(const CMat4& u, const CMat4& v);

}  // namespace twoq
