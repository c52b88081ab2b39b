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

// Symmetric eigensolvers for truncated lattice operators: a dense path
// through Eigen for small boxes and a deflated shift-invert Lanczos iteration
// on a sparse Cholesky factor for the few lowest eigenpairs of large boxes.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lattice_interp/errors.hpp"

namespace lattice_interp::eigensolvers {

struct Eigenpairs {
  std::vector<double> values;            // ascending
  std::vector<Eigen::VectorXd> vectors;  // unit norm, matching values
};

// All eigenpairs of a dense symmetric matrix with eigenvalue < threshold.
inline Eigenpairs dense_below(const Eigen::MatrixXd& m, double threshold) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed");
  }
  Eigenpairs out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (solver.eigenvalues()(i) < threshold) {
      out.values.push_back(solver.eigenvalues()(i));
      out.vectors.emplace_back(solver.eigenvectors().col(i));
    }
  }
  return out;
}

// Eigenpairs of a sparse symmetric, nonsingular h with eigenvalue < 0.
// Lanczos runs on h^{-1} through one LDL^T factorization; negative
// eigenvalues of h become the leftmost eigenvalues 1/lambda of h^{-1}, well
// separated from the images of the positive part. Converged Ritz pairs are
// locked and the iteration restarts orthogonally to them until the number of
// locked pairs equals the negative inertia read off the same factorization,
// which also recovers degenerate levels.
inline Eigenpairs sparse_negative(const Eigen::SparseMatrix<double>& h,
                                  std::uint64_t seed = 12345,
                                  double tol = 1e-13) {
  const Eigen::Index n = h.rows();
  // Integer-valued operators can hit an exact zero pivot (e.g. a diagonal
  // entry 2d - V = 0 eliminated first). Then factor H - sigma I for a tiny
  // sigma > 0 instead, find everything below sigma and keep the negatives.
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  int wanted = 0;
  bool factored = false;
  double scale = 1.0;
  for (Eigen::Index k = 0; k < h.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(h, k); it; ++it) {
      scale = std::max(scale, 1.0 + std::abs(it.value()));
    }
  }
  for (double sigma : {0.0, 1e-11 * scale, 3.7e-10 * scale, 1.3e-8 * scale}) {
    Eigen::SparseMatrix<double> shifted = h;
    if (sigma != 0.0) {
      Eigen::SparseMatrix<double> eye(n, n);
      eye.setIdentity();
      shifted -= sigma * eye;
    }
    ldlt.compute(shifted);
    if (ldlt.info() != Eigen::Success) continue;
    wanted = 0;
    bool singular = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = ldlt.vectorD()(i);
      if (d == 0.0) singular = true;
      if (d < 0.0) ++wanted;
    }
    if (!singular) {
      factored = true;
      break;
    }
  }
  if (!factored) {
    throw ConvergenceError("sparse_negative: LDL^T factorization failed");
  }
  Eigenpairs out;
  if (wanted == 0) return out;

  std::vector<Eigen::VectorXd> locked;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto orthogonalize = [](Eigen::VectorXd& v,
                          const std::vector<Eigen::VectorXd>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) v -= b.dot(v) * b;
    }
  };

  const int max_restarts = 4 * wanted + 8;
  for (int restart = 0;
       restart < max_restarts && static_cast<int>(locked.size()) < wanted;
       ++restart) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
    orthogonalize(v, locked);
    v.normalize();
    std::vector<Eigen::VectorXd> basis{v};
    std::vector<double> alpha, beta;
    const int max_steps =
        static_cast<int>(std::min<Eigen::Index>(n - locked.size(), 600));
    for (int step = 0; step < max_steps; ++step) {
      Eigen::VectorXd w = ldlt.solve(basis.back());
      alpha.push_back(basis.back().dot(w));
      orthogonalize(w, locked);
      orthogonalize(w, basis);
      const double b = w.norm();
      const bool last = step + 1 == max_steps || b < 1e-14;
      if ((step + 1) % 10 == 0 || last) {
        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
          t(i, i) = alpha[i];
          if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        std::vector<int> converged;
        bool pending = false;
        for (int i = 0; i < m; ++i) {
          const double mu = es.eigenvalues()(i);
          if (mu >= 0.0) break;
          const double residual = std::abs(b * es.eigenvectors()(m - 1, i));
          if (residual <= tol * std::abs(mu)) {
            converged.push_back(i);
          } else {
            pending = true;
          }
        }
        if (!converged.empty() && (!pending || last)) {
          for (int i : converged) {
            Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
            for (int j = 0; j < m; ++j) {
              y += es.eigenvectors()(j, i) * basis[j];
            }
            orthogonalize(y, locked);
            y.normalize();
            locked.push_back(y);
          }
          break;
        }
        if (last) break;
      }
      beta.push_back(b);
      basis.push_back(w / b);
    }
  }
  if (static_cast<int>(locked.size()) != wanted) {
    throw ConvergenceError("sparse_negative: located " +
                           std::to_string(locked.size()) + " of " +
                           std::to_string(wanted) + " negative eigenvalues");
  }
  // Rayleigh quotients on h give the eigenvalues to full precision.
  std::vector<std::pair<double, Eigen::VectorXd>> pairs;
  for (auto& y : locked) {
    const double value = y.dot(h * y);
    if (value < 0.0) pairs.emplace_back(value, y);
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [value, vec] : pairs) {
    out.values.push_back(value);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

// Smallest eigenvalue of a symmetric operator given matrix-free, by Lanczos
// with full reorthogonalization.
template <class Apply>
double lanczos_smallest(Apply&& apply, Eigen::Index n, double tol = 1e-12,
                        std::uint64_t seed = 99) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  v.normalize();
  std::vector<Eigen::VectorXd> basis{v};
  std::vector<double> alpha, beta;
  const int max_steps = static_cast<int>(std::min<Eigen::Index>(n, 800));
  for (int step = 0; step < max_steps; ++step) {
    Eigen::VectorXd w(n);
    apply(basis.back(), w);
    alpha.push_back(basis.back().dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
    }
    const double b = w.norm();
    const int m = static_cast<int>(alpha.size());
    if (m % 10 == 0 || b < 1e-14 || step + 1 == max_steps) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      const double theta = es.eigenvalues()(0);
      const double residual = std::abs(b * es.eigenvectors()(m - 1, 0));
      if (residual <= tol * std::max(1.0, std::abs(theta)) || b < 1e-14) {
        return theta;
      }
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  throw ConvergenceError("lanczos_smallest: no convergence");
}

}  // namespace lattice_interp::eigensolvers
