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

// The matrix m(U) and the local invariants G1, G2.

#include "twoq/cartan.hpp"
#include "twoq/linalg.hpp"

namespace twoq {

struct LocalInvariants {
  Complex g1;
  double g2 = 0.0;
  /// Imaginary part discarded from G2; zero up to rounding for unitaries.
  double g2_imag_residual = 0.0;
};

/// Eigen-decomposition m = vectors * diag(exp(i theta)) * vectors^T with a
/// real orthogonal `vectors` (det +1) and theta in (-pi, pi].
struct MSpectrum {
  RVec4 theta;
  RMat4 vectors;
};

/// Throws NotUnitary when ||U^dag U - I||_F > tol.
void require_unitary(const Gate4& u, double tol = tol::kUnitary);

/// Q^dag U Q.
Gate4 magic_transform(const Gate4& u, double tol = tol::kUnitary);

/// (Q^dag U Q)^T (Q^dag U Q).
CMat4 m_matrix(const Gate4& u, double tol = tol::kUnitary);

/// Simultaneous diagonalisation of Re(m) and Im(m) for a symmetric unitary m.
MSpectrum m_spectrum(const CMat4& m);

/// G1 = tr^2(m) / (16 det U), G2 = (tr^2(m) - tr(m^2)) / (4 det U).
LocalInvariants local_invariants(const Gate4& u, double tol = tol::kUnitary);

/// Closed forms of G1, G2 as functions of [c1, c2, c3].
LocalInvariants invariants_from_coords(const CartanCoord& c);

bool locally_equivalent(const Gate4& u, const Gate4& v, double tol = 1e-8);

}  // namespace twoq
