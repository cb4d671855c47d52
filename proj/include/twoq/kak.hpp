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

// Constructive KAK decomposition U = exp(i alpha) k1 A(c) k2 and
// factoring of local gates into single-qubit tensor factors.

#include "twoq/cartan.hpp"
#include "twoq/linalg.hpp"

namespace twoq {

struct KakDecomposition {
  double alpha = 0.0;
  Gate4 k1;
  Gate4 k2;
  /// Canonical Weyl chamber coordinates; equals gate_coords(U).
  CartanCoord coords{};
  /// cartan_factor(coords).
  Gate4 a_factor;
};

struct LocalFactors {
  CMat2 a;
  CMat2 b;
  /// k = exp(i phase) kron2(a, b), det a = det b = 1.
  double phase = 0.0;
};

/// Throws NotUnitary, or BranchSearchFailed when no eigenvalue ordering
/// gives a real orthogonal left factor.
KakDecomposition kak_decompose(const Gate4& u, double tol = tol::kUnitary);

Gate4 kak_reconstruct(const KakDecomposition& d);

/// Throws NotLocal unless is_local_gate(k).
LocalFactors factor_local(const Gate4& k);

}  // namespace twoq
