// Copyright 2026 The lattice-interp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Orthonormal-family and Lieb-Thirring bounds for H = (-Delta)^n - V on a
// truncated box, checked against its negative eigenvalues.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cmath>
#include <string>
#include <vector>

#include "lattice_interp/constants.hpp"
#include "lattice_interp/eigensolvers.hpp"
#include "lattice_interp/errors.hpp"
#include "lattice_interp/lattice.hpp"

namespace lattice_interp::spectral {

using OrthonormalFamily = std::vector<LatticeSeq>;

/// Largest deviation of the Gram matrix from the identity.
inline double gram_deviation(const OrthonormalFamily& fam) {
  double worst = 0.0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i; j < fam.size(); ++j) {
      const auto& a = fam[i];
      const auto& b = fam[j];
      if (a.dim() != b.dim() || a.radius() != b.radius()) {
        throw DomainError("orthonormal family members must share one box");
      }
      double dot = 0.0;
      for (std::size_t f = 0; f < a.size(); ++f) dot += a[f] * b[f];
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

/// rho(k) = sum_j u_j(k)^2.
inline LatticeSeq density(const OrthonormalFamily& fam) {
  if (fam.empty()) throw DomainError("density: empty family");
  const double dev = gram_deviation(fam);
  if (dev > 1e-8) {
    throw DomainError("density: family is not orthonormal (Gram deviation " +
                      std::to_string(dev) + ")");
  }
  LatticeSeq rho(fam.front().dim(), fam.front().radius());
  for (const auto& u : fam) {
    for (std::size_t f = 0; f < u.size(); ++f) rho[f] += u[f] * u[f];
  }
  return rho;
}

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

inline void check_theta_below_one(double theta) {
  if (!(theta < 1.0)) {
    throw DomainError("theta = 1 makes the exponent (2 - theta)/(1 - theta) "
                      "degenerate");
  }
}

/// sum rho^{(2-theta)/(1-theta)} against K^{1/(1-theta)} sum ||D^n u_j||^2.
inline Sides orth_family_check(const OrthonormalFamily& fam, double theta,
                               int order) {
  check_theta_below_one(theta);
  const int dim = fam.empty() ? 1 : fam.front().dim();
  const double k = sharp_constant(dim, order, theta).constant;
  const LatticeSeq rho = density(fam);
  const double e = (2.0 - theta) / (1.0 - theta);
  double lhs = 0.0;
  for (double r : rho.values()) lhs += std::pow(r, e);
  double energy = 0.0;
  for (const auto& u : fam) energy += diff_energy(u, order);
  return {lhs, std::pow(k, 1.0 / (1.0 - theta)) * energy};
}

/// ||u||_q, q = 2(2-theta)/(1-theta), against
/// K^{1/(2(2-theta))} ||u||^{1/(2-theta)} ||D^n u||^{(1-theta)/(2-theta)}.
inline Sides corollary_lq_check(const LatticeSeq& u, double theta, int order) {
  check_theta_below_one(theta);
  const double k = sharp_constant(u.dim(), order, theta).constant;
  const double q = 2.0 * (2.0 - theta) / (1.0 - theta);
  double sum = 0.0;
  for (double v : u.values()) sum += std::pow(std::abs(v), q);
  const double lhs = std::pow(sum, 1.0 / q);
  const double rhs = std::pow(k, 1.0 / (2.0 * (2.0 - theta))) *
                     std::pow(u.norm_sq(), 0.5 / (2.0 - theta)) *
                     std::pow(diff_energy(u, order),
                              0.5 * (1.0 - theta) / (2.0 - theta));
  return {lhs, rhs};
}

/// Constant multiplying sum V^{2-theta} in the Lieb-Thirring bound.
inline double lieb_thirring_constant(int dim, int order, double theta) {
  check_theta_below_one(theta);
  const double k = sharp_constant(dim, order, theta).constant;
  auto xpow = [](double x, double e) { return e == 0.0 ? 1.0 : std::pow(x, e); };
  return k * xpow(1.0 - theta, 1.0 - theta) / std::pow(2.0 - theta, 2.0 - theta);
}

struct SchrodingerSpec {
  int dim = 1;
  int order = 1;
  LatticeSeq potential{1, 0};  // V >= 0, centred box
  int radius = 40;             // box of the truncated operator
};

inline void validate(const SchrodingerSpec& s) {
  if (s.potential.dim() != s.dim) {
    throw DomainError("potential dimension does not match the operator");
  }
  if (s.potential.radius() > s.radius) {
    throw DomainError("potential support exceeds the box radius");
  }
  if (s.dim >= 2 && s.order != 1) {
    throw DomainError("only order 1 is supported for dim >= 2");
  }
  for (double v : s.potential.values()) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("potential must satisfy V(k) >= 0");
    }
  }
}

/// Sparse matrix of (-Delta)^n - V restricted to sequences supported in the box.
inline Eigen::SparseMatrix<double> hamiltonian(const SchrodingerSpec& s) {
  validate(s);
  const LatticeSeq v = s.potential.embedded(s.radius);
  const std::size_t n = v.size();
  std::vector<Eigen::Triplet<double>> entries;
  const auto stencil = detail::power_stencil(s.order);
  for (std::size_t f = 0; f < n; ++f) {
    const Index idx = v.index_of(f);
    const auto row = static_cast<Eigen::Index>(f);
    if (s.dim == 1) {
      for (int j = -s.order; j <= s.order; ++j) {
        const Index m{idx[0] + j, 0, 0};
        if (v.contains(m)) {
          entries.emplace_back(row, static_cast<Eigen::Index>(v.flat(m)),
                               stencil[j + s.order]);
        }
      }
    } else {
      entries.emplace_back(row, row, 2.0 * s.dim);
      for (int a = 0; a < s.dim; ++a) {
        for (int step : {-1, 1}) {
          Index m = idx;
          m[a] += step;
          if (v.contains(m)) {
            entries.emplace_back(row, static_cast<Eigen::Index>(v.flat(m)), -1.0);
          }
        }
      }
    }
    entries.emplace_back(row, row, -v[f]);
  }
  Eigen::SparseMatrix<double> h(static_cast<Eigen::Index>(n),
                                static_cast<Eigen::Index>(n));
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

inline constexpr Eigen::Index kDenseEigenLimit = 600;

/// Negative eigenpairs of the truncated operator, ascending.
inline eigensolvers::Eigenpairs negative_spectrum(const SchrodingerSpec& s) {
  const Eigen::SparseMatrix<double> h = hamiltonian(s);
  if (h.rows() <= kDenseEigenLimit) {
    return eigensolvers::dense_below(Eigen::MatrixXd(h), 0.0);
  }
  return eigensolvers::sparse_negative(h);
}

struct SpectralReport {
  std::vector<double> eigenvalues;
  double trace = 0.0;           // sum |lambda_j|
  double bound_constant = 0.0;
  double potential_sum = 0.0;   // sum V^{2 - theta}
  double bound = 0.0;
  double ratio = 0.0;           // trace / bound
  double rayleigh_residual = 0.0;
};

/// sum_j lambda_j - (sum_j ||D^n u_j||^2 - (V, rho)) for the computed pairs.
inline double rayleigh_residual(const SchrodingerSpec& s,
                                const eigensolvers::Eigenpairs& pairs) {
  const LatticeSeq v = s.potential.embedded(s.radius);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t j = 0; j < pairs.values.size(); ++j) {
    LatticeSeq u(s.dim, s.radius);
    for (std::size_t f = 0; f < u.size(); ++f) {
      u[f] = pairs.vectors[j](static_cast<Eigen::Index>(f));
    }
    lhs += pairs.values[j];
    rhs += diff_energy(u, s.order);
    for (std::size_t f = 0; f < u.size(); ++f) rhs -= v[f] * u[f] * u[f];
  }
  return lhs - rhs;
}

inline SpectralReport lieb_thirring_check(const SchrodingerSpec& s, double theta) {
  validate(s);
  SpectralReport r;
  r.bound_constant = lieb_thirring_constant(s.dim, s.order, theta);
  const auto pairs = negative_spectrum(s);
  r.eigenvalues = pairs.values;
  for (double l : pairs.values) r.trace += std::abs(l);
  for (double v : s.potential.values()) r.potential_sum += std::pow(v, 2.0 - theta);
  r.bound = r.bound_constant * r.potential_sum;
  r.ratio = r.bound > 0.0 ? r.trace / r.bound : 0.0;
  r.rayleigh_residual = rayleigh_residual(s, pairs);
  return r;
}

/// Box well: depth on the cube |k_i| <= halfwidth.
inline LatticeSeq box_well(int dim, double depth, int halfwidth) {
  LatticeSeq v(dim, halfwidth);
  for (auto& x : v.values()) x = depth;
  return v;
}

}  // namespace lattice_interp::spectral
