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

// Brute-force ground truth on truncated boxes: Green's functions by direct
// linear solves, the constrained maximum of u(0)^2, and the largest value of
// the interpolation ratio. Every closed form in the library is checked
// against these routines.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lattice_interp/eigensolvers.hpp"
#include "lattice_interp/errors.hpp"
#include "lattice_interp/lattice.hpp"
#include "lattice_interp/numerics.hpp"

namespace lattice_interp::oracle {

/// Default box radii for which the stated tolerances hold when lambda >= 0.5.
inline int default_radius(int dim) { return dim == 3 ? 30 : 60; }

/// Solves the truncated system A(lambda) G = delta by conjugate gradients.
inline LatticeSeq green_solve(const DiffOperatorSpec& spec, int radius,
                              double rel_tol = 1e-12) {
  TruncatedOperator op(spec, radius);
  LatticeSeq g(spec.dim, radius);
  std::vector<double> rhs(op.size(), 0.0);
  rhs[g.flat({0, 0, 0})] = 1.0;
  conjugate_gradient(op, rhs, g.values(), rel_tol);
  return g;
}

// Dense matrix of the truncated operator.
inline Eigen::MatrixXd dense_matrix(const TruncatedOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.size());
  Eigen::MatrixXd m(n, n);
  std::vector<double> e(op.size(), 0.0), col(op.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    op.apply(e, col);
    e[j] = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

inline constexpr std::size_t kDenseLimit = 4000;

/// Second oracle for small boxes: dense Cholesky solve of the same system.
inline LatticeSeq green_solve_dense(const DiffOperatorSpec& spec, int radius) {
  TruncatedOperator op(spec, radius);
  if (op.size() > kDenseLimit) {
    throw DomainError("green_solve_dense: box with " +
                      std::to_string(op.size()) +
                      " sites exceeds the dense limit");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(dense_matrix(op));
  if (llt.info() != Eigen::Success) {
    throw ConvergenceError("green_solve_dense: matrix is not positive definite");
  }
  LatticeSeq g(spec.dim, radius);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(op.size()));
  rhs(static_cast<Eigen::Index>(g.flat({0, 0, 0}))) = 1.0;
  Eigen::VectorXd x = llt.solve(rhs);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = x(static_cast<Eigen::Index>(i));
  return g;
}

/// Smallest eigenvalue of the truncated A(lambda).
inline double smallest_eigenvalue(const DiffOperatorSpec& spec, int radius) {
  TruncatedOperator op(spec, radius);
  if (op.size() <= 700) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_matrix(op),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }
  return eigensolvers::lanczos_smallest(
      [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        op.apply(std::span<const double>(x.data(), op.size()),
                 std::span<double>(y.data(), op.size()));
      },
      static_cast<Eigen::Index>(op.size()));
}

/// f = G(0), g = ||G||^2, h = ||D^n G||^2 of a (truncated) Green's function.
struct GreenNorms {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
};

inline GreenNorms green_norms(const LatticeSeq& green, int order) {
  return {green.value_at({0, 0, 0}), green.norm_sq(),
          diff_energy(green, order)};
}

/// Share of ||u||^2 carried by the outermost shell of the box.
inline double boundary_mass_fraction(const LatticeSeq& u) {
  double shell = 0.0;
  for (std::size_t f = 0; f < u.size(); ++f) {
    const Index n = u.index_of(f);
    for (int a = 0; a < u.dim(); ++a) {
      if (std::abs(n[a]) == u.radius()) {
        shell += u[f] * u[f];
        break;
      }
    }
  }
  const double total = u.norm_sq();
  return total > 0.0 ? shell / total : 0.0;
}

/// u(0)^2 / (||u||^{2 theta} ||D^n u||^{2 (1 - theta)}).
inline double interpolation_ratio(const LatticeSeq& u, int order, double theta) {
  const double u0 = u.value_at({0, 0, 0});
  const double n2 = u.norm_sq();
  const double d2 = diff_energy(u, order);
  return u0 * u0 / (std::pow(n2, theta) * std::pow(d2, 1.0 - theta));
}

struct MaximizeResult {
  double value = 0.0;
  LatticeSeq argmax;
  std::optional<double> lambda;  // empty when the maximizer is delta
};

namespace detail {

inline void check_constraint(int dim, int order, double d) {
  if (dim >= 2 && order != 1) {
    throw DomainError("maximize_u0: only order 1 is supported for dim >= 2");
  }
  const double w = spectral_width(dim, order);
  if (!(d > 0.0 && d < w)) {
    throw DomainError("maximize_u0: constraint d = " + std::to_string(d) +
                      " must lie in (0, " + std::to_string(w) + ")");
  }
}

// lambda on the branch selected by the sign of the branch parameter: t is
// log(lambda) for lambda > 0 and log(-w - lambda) below the spectrum.
inline double branch_lambda(bool positive, double t, double w) {
  return positive ? std::exp(t) : -w - std::exp(t);
}

}  // namespace detail

/// sup{u(0)^2 : ||u||^2 = 1, ||D^n u||^2 = d} on the box of the given radius.
///
/// The maximizer is a multiple of the Green's function G_lambda of the
/// truncated problem, so lambda is located by bisection on the lattice ratio
/// ||D^n G||^2 / ||G||^2 = d; u(0)^2 = G(0)^2 / ||G||^2 is then reported.
inline MaximizeResult maximize_u0(int dim, int order, double d, int radius,
                                  double boundary_tol = 1e-8) {
  detail::check_constraint(dim, order, d);
  const double w = spectral_width(dim, order);
  const double d_mid = delta_energy(dim, order);
  if (d == d_mid) {
    return {1.0, LatticeSeq::delta(dim, radius), std::nullopt};
  }
  const bool positive = d < d_mid;
  auto ratio = [&](double t) {
    const double lam = detail::branch_lambda(positive, t, w);
    const GreenNorms n = green_norms(green_solve({dim, order, lam}, radius), order);
    return n.h / n.g;
  };
  // On the positive branch d(lambda) increases with t, below the spectrum it
  // decreases with t.
  auto residual = [&](double t) {
    return positive ? ratio(t) - d : d - ratio(t);
  };
  double lo = -25.0, hi = 25.0;
  if (residual(lo) > 0.0 || residual(hi) < 0.0) {
    throw ConvergenceError("maximize_u0: d = " + std::to_string(d) +
                           " is not reachable on a box of radius " +
                           std::to_string(radius));
  }
  const double t = numerics::bisect(residual, lo, hi, 1e-14);
  const double lam = detail::branch_lambda(positive, t, w);
  LatticeSeq g = green_solve({dim, order, lam}, radius);
  if (boundary_mass_fraction(g) > boundary_tol) {
    throw ConvergenceError("maximize_u0: radius " + std::to_string(radius) +
                           " too small, boundary mass exceeds tolerance");
  }
  const double norm = std::sqrt(g.norm_sq());
  const double u0 = g.value_at({0, 0, 0}) / norm;
  for (auto& v : g.values()) v /= norm;
  return {u0 * u0, std::move(g), lam};
}

/// Independent check of maximize_u0 for small boxes: Riemannian gradient
/// ascent of u(0)^2 on {||u||^2 = 1, ||D^n u||^2 = d}, started from a mixture
/// of a broad bump and its sign-alternating twin. Returns the value reached.
inline double maximize_u0_projected_gradient(int dim, int order, double d,
                                             int radius,
                                             int max_iter = 200000) {
  detail::check_constraint(dim, order, d);
  const double w = spectral_width(dim, order);
  TruncatedOperator lop({dim, order, 1.0}, radius);  // (D*D)^n + 1
  const std::size_t n = lop.size();
  std::vector<double> tmp(n);
  auto apply_l = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(static_cast<Eigen::Index>(n));
    lop.apply(std::span<const double>(x.data(), n),
              std::span<double>(y.data(), n));
    return Eigen::VectorXd(y - x);
  };
  auto energy = [&](const Eigen::VectorXd& x) { return x.dot(apply_l(x)); };

  LatticeSeq probe(dim, radius);
  const std::size_t centre = probe.flat({0, 0, 0});
  Eigen::VectorXd bump(static_cast<Eigen::Index>(n));
  Eigen::VectorXd twin(static_cast<Eigen::Index>(n));
  for (std::size_t f = 0; f < n; ++f) {
    const Index idx = probe.index_of(f);
    double r2 = 0.0;
    int parity = 0;
    for (int a = 0; a < dim; ++a) {
      r2 += static_cast<double>(idx[a]) * idx[a];
      parity += std::abs(idx[a]);
    }
    const double scale = 0.35 * radius + 1.0;
    bump(f) = std::exp(-r2 / (2.0 * scale * scale)) * (1.0 + 0.1 * idx[0] / (radius + 1.0));
    twin(f) = (parity % 2 == 0 ? 1.0 : -1.0) * bump(f);
  }
  bump.normalize();
  twin.normalize();
  auto mix = [&](double s) {
    Eigen::VectorXd u = std::cos(s) * bump + std::sin(s) * twin;
    return Eigen::VectorXd(u / u.norm());
  };
  if (!(energy(bump) < d && energy(twin) > d)) {
    throw ConvergenceError("maximize_u0_projected_gradient: starting family "
                           "does not bracket d");
  }
  const double s0 = numerics::bisect(
      [&](double s) { return energy(mix(s)) - d; }, 0.0, std::numbers::pi / 2);
  Eigen::VectorXd u = mix(s0);
  if (u(static_cast<Eigen::Index>(centre)) < 0.0) u = -u;

  // Newton retraction onto the constraint set along span{v, Lv}.
  auto retract = [&](const Eigen::VectorXd& v) -> std::optional<Eigen::VectorXd> {
    const Eigen::VectorXd n1 = v;
    const Eigen::VectorXd n2 = apply_l(v);
    double a = 0.0, b = 0.0;
    for (int it = 0; it < 50; ++it) {
      const Eigen::VectorXd x = v + a * n1 + b * n2;
      const Eigen::VectorXd lx = apply_l(x);
      const double r1 = x.squaredNorm() - 1.0;
      const double r2 = x.dot(lx) - d;
      if (std::abs(r1) < 1e-15 && std::abs(r2) < 1e-15 * w) return x;
      const double j11 = 2.0 * x.dot(n1), j12 = 2.0 * x.dot(n2);
      const double j21 = 2.0 * lx.dot(n1), j22 = 2.0 * lx.dot(n2);
      const double det = j11 * j22 - j12 * j21;
      if (det == 0.0) return std::nullopt;
      a -= (j22 * r1 - j12 * r2) / det;
      b -= (-j21 * r1 + j11 * r2) / det;
    }
    const Eigen::VectorXd x = v + a * n1 + b * n2;
    if (std::abs(x.squaredNorm() - 1.0) < 1e-12) return x;
    return std::nullopt;
  };

  double step = 0.1;
  double value = u(static_cast<Eigen::Index>(centre)) *
                 u(static_cast<Eigen::Index>(centre));
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    grad(static_cast<Eigen::Index>(centre)) =
        2.0 * u(static_cast<Eigen::Index>(centre));
    // Project onto the orthogonal complement of span{u, Lu}.
    Eigen::MatrixXd normals(static_cast<Eigen::Index>(n), 2);
    normals.col(0) = u;
    normals.col(1) = apply_l(u);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(normals);
    const Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), 2);
    const Eigen::VectorXd tangent = grad - q * (q.transpose() * grad);
    if (tangent.norm() < 1e-13) break;
    bool accepted = false;
    while (step > 1e-16) {
      const auto next = retract(u + step * tangent);
      if (next) {
        const double v = (*next)(static_cast<Eigen::Index>(centre)) *
                         (*next)(static_cast<Eigen::Index>(centre));
        if (v > value) {
          u = *next;
          value = v;
          accepted = true;
          step *= 1.5;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return value;
}

struct RatioResult {
  double ratio = 0.0;
  double lambda = 0.0;
};

/// Largest interpolation ratio u(0)^2 / (||u||^{2 theta} ||D^n u||^{2(1-theta)})
/// on the truncated box, attained inside the family of truncated Green's
/// functions G_lambda, lambda > 0; lambda is searched on
/// [exp(log_lo), exp(log_hi)].
inline RatioResult max_interpolation_ratio(int dim, int order, double theta,
                                           int radius, double log_lo = -12.0,
                                           double log_hi = 12.0) {
  auto ratio_at = [&](double t) {
    const LatticeSeq g = green_solve({dim, order, std::exp(t)}, radius);
    return interpolation_ratio(g, order, theta);
  };
  const numerics::MaximumResult m =
      numerics::maximize(ratio_at, log_lo, log_hi, 48, 1e-10);
  return {m.value, std::exp(m.argmax)};
}

}  // namespace lattice_interp::oracle
