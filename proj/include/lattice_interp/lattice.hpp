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

// Finitely supported sequences on Z^d (d <= 3) stored on the box
// {-N..N}^d, with the difference operators of the inequalities acting on
// their zero extension.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lattice_interp/errors.hpp"

namespace lattice_interp {

using Index = std::array<int, 3>;

class LatticeSeq {
 public:
  LatticeSeq(int dim, int radius) : dim_(dim), radius_(radius) {
    if (dim < 1 || dim > 3) {
      throw DomainError("LatticeSeq: dim must be 1, 2 or 3, got " +
                        std::to_string(dim));
    }
    if (radius < 0) {
      throw DomainError("LatticeSeq: radius must be >= 0, got " +
                        std::to_string(radius));
    }
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(side());
    values_.assign(n, 0.0);
  }

  static LatticeSeq delta(int dim, int radius) {
    LatticeSeq u(dim, radius);
    u.at({0, 0, 0}) = 1.0;
    return u;
  }

  int dim() const { return dim_; }
  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }
  std::size_t size() const { return values_.size(); }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double& operator[](std::size_t flat) { return values_[flat]; }
  double operator[](std::size_t flat) const { return values_[flat]; }

  bool contains(const Index& n) const {
    for (int a = 0; a < dim_; ++a) {
      if (n[a] < -radius_ || n[a] > radius_) return false;
    }
    return true;
  }

  std::size_t flat(const Index& n) const {
    std::size_t f = 0;
    for (int a = 0; a < dim_; ++a) {
      f = f * static_cast<std::size_t>(side()) +
          static_cast<std::size_t>(n[a] + radius_);
    }
    return f;
  }

  Index index_of(std::size_t flat) const {
    Index n{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
      n[a] = static_cast<int>(flat % side()) - radius_;
      flat /= side();
    }
    return n;
  }

  double& at(const Index& n) {
    if (!contains(n)) throw DomainError("LatticeSeq::at: index outside box");
    return values_[flat(n)];
  }

  // Zero extension outside the box.
  double value_at(const Index& n) const {
    return contains(n) ? values_[flat(n)] : 0.0;
  }

  double norm_sq() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return s;
  }

  // Copy onto a box of a different radius; entries outside the new box must
  // vanish when shrinking.
  LatticeSeq embedded(int new_radius) const {
    LatticeSeq out(dim_, new_radius);
    for (std::size_t f = 0; f < size(); ++f) {
      const Index n = index_of(f);
      if (out.contains(n)) {
        out[out.flat(n)] = values_[f];
      } else if (values_[f] != 0.0) {
        throw DomainError("LatticeSeq::embedded: nonzero entry outside the "
                          "target box");
      }
    }
    return out;
  }

 private:
  int dim_;
  int radius_;
  std::vector<double> values_;
};

// Forward difference along one axis, D u(n) = u(n + e_axis) - u(n), of the
// zero-extended sequence. The result lives on the box of radius N + 1 so
// that the jumps across the box boundary are kept.
inline LatticeSeq forward_difference(const LatticeSeq& u, int axis) {
  if (axis < 0 || axis >= u.dim()) {
    throw DomainError("forward_difference: axis " + std::to_string(axis) +
                      " out of range for dim " + std::to_string(u.dim()));
  }
  LatticeSeq out(u.dim(), u.radius() + 1);
  for (std::size_t f = 0; f < out.size(); ++f) {
    Index n = out.index_of(f);
    Index m = n;
    m[axis] += 1;
    out[f] = u.value_at(m) - u.value_at(n);
  }
  return out;
}

// ||grad u||^2 = sum over axes of ||D_axis u||^2.
inline double grad_norm_sq(const LatticeSeq& u) {
  double s = 0.0;
  for (int a = 0; a < u.dim(); ++a) s += forward_difference(u, a).norm_sq();
  return s;
}

// -Delta u = sum_axis D*D u, on the box of radius N + 1.
inline LatticeSeq neg_laplacian(const LatticeSeq& u) {
  LatticeSeq out(u.dim(), u.radius() + 1);
  for (std::size_t f = 0; f < out.size(); ++f) {
    const Index n = out.index_of(f);
    double s = 0.0;
    for (int a = 0; a < u.dim(); ++a) {
      Index p = n, q = n;
      p[a] += 1;
      q[a] -= 1;
      s += 2.0 * u.value_at(n) - u.value_at(p) - u.value_at(q);
    }
    out[f] = s;
  }
  return out;
}

// ||D^n u||^2 where D^n is (-Delta)^{n/2} for even n and grad (-Delta)^{(n-1)/2}
// for odd n; equivalently the quadratic form ((D*D)^n u, u).
inline double diff_energy(const LatticeSeq& u, int order) {
  if (order < 1) {
    throw DomainError("diff_energy: order must be >= 1");
  }
  LatticeSeq w = u;
  for (int k = 0; k < order / 2; ++k) w = neg_laplacian(w);
  return order % 2 == 0 ? w.norm_sq() : grad_norm_sq(w);
}

/// Operator A(lambda) of the resolvent problem A(lambda) G = delta:
/// (D*D)^order + lambda for lambda > 0 and -(D*D)^order - lambda for lambda
/// below the spectrum.
struct DiffOperatorSpec {
  int dim = 1;
  int order = 1;
  double lambda = 1.0;
};

// Right end of the spectrum of (D*D)^order on l^2(Z^dim).
inline double spectral_width(int dim, int order) {
  return std::pow(4.0 * dim, order);
}

// ||D^n delta||^2: the constraint value at which delta is the extremal.
inline double delta_energy(int dim, int order) {
  if (order == 1) return 2.0 * dim;
  // 1D: centre coefficient of (D*D)^n, the binomial C(2n, n).
  double c = 1.0;
  for (int k = 1; k <= order; ++k) c = c * (order + k) / k;
  return c;
}

inline void validate(const DiffOperatorSpec& spec) {
  if (spec.dim < 1 || spec.dim > 3) {
    throw DomainError("DiffOperatorSpec: dim must be 1, 2 or 3");
  }
  if (spec.order < 1) throw DomainError("DiffOperatorSpec: order must be >= 1");
  if (spec.dim >= 2 && spec.order != 1) {
    throw DomainError("DiffOperatorSpec: only order 1 is supported for dim >= 2");
  }
  const double w = spectral_width(spec.dim, spec.order);
  if (!(spec.lambda > 0.0 || spec.lambda < -w)) {
    throw DomainError("DiffOperatorSpec: lambda = " +
                      std::to_string(spec.lambda) +
                      " lies in the spectral interval [" + std::to_string(-w) +
                      ", 0]");
  }
}

namespace detail {

// 1D stencil of (D*D)^order: offsets -order..order, coefficients
// (-1)^j C(2 order, order + j).
inline std::vector<double> power_stencil(int order) {
  std::vector<double> c(2 * order + 1);
  for (int j = -order; j <= order; ++j) {
    double b = 1.0;
    const int k = order + j;
    for (int i = 1; i <= k; ++i) b = b * (2 * order - k + i) / i;
    c[j + order] = (j % 2 == 0 ? 1.0 : -1.0) * b;
  }
  return c;
}

}  // namespace detail

// A(lambda) u for the zero-extended u; the result is supported on the box of
// radius N + order.
inline LatticeSeq apply_A_lambda(const LatticeSeq& u,
                                 const DiffOperatorSpec& spec) {
  validate(spec);
  if (spec.dim != u.dim()) {
    throw DomainError("apply_A_lambda: operator and sequence dims differ");
  }
  const double sign = spec.lambda > 0.0 ? 1.0 : -1.0;
  LatticeSeq out(u.dim(), u.radius() + spec.order);
  if (spec.order == 1) {
    const LatticeSeq l = neg_laplacian(u);
    for (std::size_t f = 0; f < out.size(); ++f) {
      const Index n = out.index_of(f);
      out[f] = sign * (l.value_at(n) + spec.lambda * u.value_at(n));
    }
    return out;
  }
  const std::vector<double> st = detail::power_stencil(spec.order);
  for (std::size_t f = 0; f < out.size(); ++f) {
    const int n = out.index_of(f)[0];
    double s = spec.lambda * u.value_at({n, 0, 0});
    for (int j = -spec.order; j <= spec.order; ++j) {
      s += st[j + spec.order] * u.value_at({n + j, 0, 0});
    }
    out[f] = sign * s;
  }
  return out;
}

/// A(lambda) restricted to the box {-N..N}^d (zero Dirichlet truncation),
/// acting on flat coefficient vectors. Symmetric positive definite whenever
/// lambda lies in the resolvent region.
class TruncatedOperator {
 public:
  TruncatedOperator(const DiffOperatorSpec& spec, int radius)
      : spec_(spec), radius_(radius) {
    validate(spec);
    side_ = 2 * radius + 1;
    size_ = 1;
    for (int a = 0; a < spec.dim; ++a) size_ *= static_cast<std::size_t>(side_);
    sign_ = spec.lambda > 0.0 ? 1.0 : -1.0;
    stencil_ = detail::power_stencil(spec.order);
  }

  std::size_t size() const { return size_; }
  int radius() const { return radius_; }
  const DiffOperatorSpec& spec() const { return spec_; }

  void apply(std::span<const double> x, std::span<double> y) const {
    const int s = side_;
    const double lam = spec_.lambda;
    if (spec_.dim == 1) {
      const int o = spec_.order;
      for (int i = 0; i < s; ++i) {
        double acc = lam * x[i];
        const int jlo = std::max(-o, -i);
        const int jhi = std::min(o, s - 1 - i);
        for (int j = jlo; j <= jhi; ++j) acc += stencil_[j + o] * x[i + j];
        y[i] = sign_ * acc;
      }
      return;
    }
    const double diag = 2.0 * spec_.dim + lam;
    if (spec_.dim == 2) {
      for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
          const std::size_t f = static_cast<std::size_t>(i) * s + j;
          double acc = diag * x[f];
          if (i > 0) acc -= x[f - s];
          if (i < s - 1) acc -= x[f + s];
          if (j > 0) acc -= x[f - 1];
          if (j < s - 1) acc -= x[f + 1];
          y[f] = sign_ * acc;
        }
      }
      return;
    }
    const std::size_t s2 = static_cast<std::size_t>(s) * s;
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        for (int k = 0; k < s; ++k) {
          const std::size_t f = i * s2 + static_cast<std::size_t>(j) * s + k;
          double acc = diag * x[f];
          if (i > 0) acc -= x[f - s2];
          if (i < s - 1) acc -= x[f + s2];
          if (j > 0) acc -= x[f - s];
          if (j < s - 1) acc -= x[f + s];
          if (k > 0) acc -= x[f - 1];
          if (k < s - 1) acc -= x[f + 1];
          y[f] = sign_ * acc;
        }
      }
    }
  }

 private:
  DiffOperatorSpec spec_;
  int radius_;
  int side_;
  std::size_t size_;
  double sign_;
  std::vector<double> stencil_;
};

struct CgReport {
  int iterations = 0;
  double relative_residual = 0.0;
};

// Conjugate gradient for a symmetric positive definite operator exposing
// size() and apply(x, y). x holds the initial guess on entry.
template <class Operator>
CgReport conjugate_gradient(const Operator& op, std::span<const double> b,
                            std::span<double> x, double rel_tol = 1e-12,
                            int max_iter = 100000) {
  const std::size_t n = op.size();
  std::vector<double> r(n), p(n), q(n);
  op.apply(x, q);
  double bnorm = 0.0;
  double rr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = b[i] - q[i];
    p[i] = r[i];
    rr += r[i] * r[i];
    bnorm += b[i] * b[i];
  }
  bnorm = std::sqrt(bnorm);
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    return {0, 0.0};
  }
  int it = 0;
  while (std::sqrt(rr) > rel_tol * bnorm) {
    if (it >= max_iter) {
      throw ConvergenceError("conjugate_gradient: no convergence after " +
                             std::to_string(max_iter) + " iterations");
    }
    op.apply(p, q);
    double pq = 0.0;
    for (std::size_t i = 0; i < n; ++i) pq += p[i] * q[i];
    if (!(pq > 0.0)) {
      throw ConvergenceError("conjugate_gradient: operator is not positive "
                             "definite");
    }
    const double alpha = rr / pq;
    double rr_new = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
      rr_new += r[i] * r[i];
    }
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    ++it;
  }
  return {it, std::sqrt(rr) / bnorm};
}

}  // namespace lattice_interp
