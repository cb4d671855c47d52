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

#include "twoq/entangler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "twoq/errors.hpp"
#include "twoq/invariants.hpp"
#include "twoq/kak.hpp"
#include "twoq/weyl.hpp"

namespace twoq {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kAntipodalTol = 1e-9;
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::optional<RVec4> hull_witness(const std::array<double, 4>& phases) {
  std::array<Complex, 4> lambda;
  for (int k = 0; k < 4; ++k) lambda[k] = std::polar(1.0, phases[k]);

  // Two antipodal points.
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (std::abs(lambda[a] + lambda[b]) < kAntipodalTol) {
        RVec4 w = RVec4::Zero();
        w(a) = w(b) = 0.5;
        return w;
      }
    }
  }
  // A triangle containing zero: barycentric solve on each triple.
  std::optional<RVec4> best;
  double best_min = -kHullTol;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<int, 3> idx;
    for (int k = 0, n = 0; k < 4; ++k) {
      if (k != skip) idx[n++] = k;
    }
    Eigen::Matrix3d sys;
    for (int n = 0; n < 3; ++n) {
      sys(0, n) = lambda[idx[n]].real();
      sys(1, n) = lambda[idx[n]].imag();
      sys(2, n) = 1.0;
    }
    if (std::abs(sys.determinant()) < 1e-12) continue;
    const Eigen::Vector3d sol = sys.fullPivLu().solve(Eigen::Vector3d(0, 0, 1));
    if (sol.minCoeff() >= best_min) {
      best_min = sol.minCoeff();
      RVec4 w = RVec4::Zero();
      for (int n = 0; n < 3; ++n) w(idx[n]) = std::max(sol(n), 0.0);
      best = w / w.sum();
    }
  }
  return best;
}

std::array<double, 4> cartan_phases(const CartanCoord& c) {
  return {c[0] - c[1] + c[2], c[0] + c[1] - c[2], -c[0] - c[1] - c[2],
          -c[0] + c[1] + c[2]};
}

}  // namespace

EntValue ent(const CVec4& psi) {
  if (std::abs(psi.norm() - 1.0) > kNormTol) {
    throw Error(ErrorCode::NotNormalized, "state is not normalised");
  }
  const CMat4 p = -0.5 * pauli_pair(1);
  EntValue out;
  out.value = (psi.transpose() * p * psi)(0, 0);
  out.magnitude = std::abs(out.value);
  return out;
}

PeVerdict hull_verdict(const std::array<double, 4>& phases) {
  std::array<double, 4> sorted;
  for (int k = 0; k < 4; ++k) {
    double r = std::fmod(phases[k], 2.0 * kPi);
    sorted[k] = r < 0.0 ? r + 2.0 * kPi : r;
  }
  std::sort(sorted.begin(), sorted.end());
  double gap = sorted[0] + 2.0 * kPi - sorted[3];
  for (int k = 1; k < 4; ++k) gap = std::max(gap, sorted[k] - sorted[k - 1]);
  PeVerdict out;
  out.margin = std::cos(0.5 * gap);
  out.is_pe = gap <= kPi + kHullTol;
  if (out.is_pe) out.hull_witness = hull_witness(phases);
  return out;
}

PeVerdict is_perfect_entangler(const Gate4& u) {
  const MSpectrum spec = m_spectrum(m_matrix(u));
  return hull_verdict({spec.theta(0), spec.theta(1), spec.theta(2), spec.theta(3)});
}

bool pe_from_coords(const CartanCoord& c) {
  const CartanCoord w = canonicalize(c);
  return w[0] + w[1] >= kPi / 2.0 - kHullTol &&
         w[1] + w[2] <= kPi / 2.0 + kHullTol &&
         w[0] - w[1] <= kPi / 2.0 + kHullTol;
}

bool pe_inequalities(const CartanCoord& c) {
  const CartanCoord w = canonicalize(c);
  std::array<int, 3> p{0, 1, 2};
  do {
    const double ik = w[p[0]] + w[p[2]];
    const double ij = w[p[0]] + w[p[1]] + kPi / 2.0;
    const bool chain = ik <= ij + kHullTol;
    if (chain && ik >= kPi / 2.0 - kHullTol && ij <= kPi + kHullTol) return true;
    if (chain && ik >= 1.5 * kPi - kHullTol && ij <= 2.0 * kPi + kHullTol) {
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

EntanglingInput entangling_input(const Gate4& u) {
  if (!is_perfect_entangler(u).is_pe) {
    throw Error(ErrorCode::NotPerfectEntangler,
                "gate is not a perfect entangler");
  }
  const KakDecomposition d = kak_decompose(u);
  const std::array<double, 4> theta = cartan_phases(d.coords);
  const std::optional<RVec4> w = hull_verdict(theta).hull_witness;
  if (!w) {
    throw Error(ErrorCode::NotPerfectEntangler,
                "Cartan factor spectrum has no hull witness");
  }
  // phi_k = sqrt(w_k) / f_k with f_k = exp(i theta_k / 2): Q phi is a
  // product state and A Q phi = Q sqrt(w) is maximally entangled.
  CVec4 phi;
  for (int k = 0; k < 4; ++k) {
    phi(k) = std::sqrt((*w)(k)) * std::exp(-0.5 * kI * theta[k]);
  }
  EntanglingInput out;
  out.psi_in = d.k2.adjoint() * (magic_basis() * phi);
  out.psi_out = u * out.psi_in;
  return out;
}

double tetrahedron_volume(const CartanCoord& a, const CartanCoord& b,
                          const CartanCoord& c, const CartanCoord& d) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) {
    m(0, i) = b[i] - a[i];
    m(1, i) = c[i] - a[i];
    m(2, i) = d[i] - a[i];
  }
  return std::abs(m.determinant()) / 6.0;
}

VolumeReport pe_volume_exact() {
  constexpr double h = kPi / 2.0;
  constexpr double q = kPi / 4.0;
  const CartanCoord o{0, 0, 0}, a1{kPi, 0, 0}, a2{h, h, 0}, a3{h, h, h};
  const CartanCoord l{h, 0, 0}, m{3 * q, q, 0}, n{3 * q, q, q};
  const CartanCoord p{q, q, q}, qq{q, q, 0};
  VolumeReport out;
  out.chamber = tetrahedron_volume(o, a1, a2, a3);
  out.cut_lqpo = tetrahedron_volume(l, qq, p, o);
  out.cut_npa2a3 = tetrahedron_volume(n, p, a2, a3);
  out.cut_lmna1 = tetrahedron_volume(l, m, n, a1);
  out.pe = out.chamber - out.cut_lqpo - out.cut_npa2a3 - out.cut_lmna1;
  return out;
}

std::uint64_t mc_block_seed(std::uint64_t seed, std::uint64_t block) {
  return splitmix64(seed ^ splitmix64(block));
}

double pe_fraction_mc(std::uint64_t n, std::uint64_t seed, int threads) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidParams, "sample count must be positive");
  }
  const std::uint64_t blocks = (n + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<std::uint64_t> counts(blocks, 0);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      std::mt19937_64 rng(mc_block_seed(seed, b));
      const std::uint64_t size = std::min(kMcBlockSize, n - b * kMcBlockSize);
      std::uint64_t hits = 0;
      for (std::uint64_t s = 0; s < size; ++s) {
        if (pe_from_coords(sample_chamber(rng))) ++hits;
      }
      counts[b] = hits;
    }
  };
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1, blocks));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return static_cast<double>(total) / static_cast<double>(n);
}

}  // namespace twoq
