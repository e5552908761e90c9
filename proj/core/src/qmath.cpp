#include "qct/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qct {

double overlap(PureState u, PureState v) {
  return std::cos(u.half_angle - v.half_angle);
}

namespace {

// Sign and log-magnitude of the factor-overlap product. Returns
// {0, -inf} when some factor overlap is exactly zero.
std::pair<int, double> product_overlap_log(const ProductState& p,
                                           const ProductState& q) {
  if (p.factors.size() != q.factors.size()) {
    throw std::invalid_argument(
        "product_overlap: factor counts differ (" +
        std::to_string(p.factors.size()) + " vs " +
        std::to_string(q.factors.size()) + ")");
  }
  int sign = 1;
  double log_abs = 0.0;
  for (size_t k = 0; k < p.factors.size(); ++k) {
    const double o = overlap(p.factors[k], q.factors[k]);
    if (o == 0.0) return {0, -HUGE_VAL};
    if (o < 0.0) sign = -sign;
    log_abs += std::log(std::fabs(o));
  }
  return {sign, log_abs};
}

}  // namespace

double product_overlap(const ProductState& p, const ProductState& q) {
  const auto [sign, log_abs] = product_overlap_log(p, q);
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

double born_probability(const ProductState& state, const ProductState& target) {
  const auto [sign, log_abs] = product_overlap_log(state, target);
  if (sign == 0) return 0.0;
  return std::exp(2.0 * log_abs);
}

std::vector<double> dense_amplitudes(const ProductState& p) {
  const int n = p.particle_count();
  if (n < 1 || n > 10) {
    throw std::invalid_argument("dense_amplitudes: particle count " +
                                std::to_string(n) + " outside [1, 10]");
  }
  std::vector<double> v(size_t{1} << n);
  for (size_t idx = 0; idx < v.size(); ++idx) {
    double amp = 1.0;
    for (int k = 0; k < n; ++k) {
      const double a = p.factors[static_cast<size_t>(k)].half_angle;
      const bool one = (idx >> (n - 1 - k)) & 1u;
      amp *= one ? std::sin(a) : std::cos(a);
    }
    v[idx] = amp;
  }
  return v;
}

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 1 || dim > 1024) {
    throw std::invalid_argument("SymMatrix: dim " + std::to_string(dim) +
                                " outside [1, 1024]");
  }
  a_.assign(static_cast<size_t>(dim) * dim, 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::fabs(x));
  return m;
}

bool SymMatrix::is_symmetric(double tol) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r + 1; c < dim_; ++c)
      if (std::fabs(at(r, c) - at(c, r)) > tol) return false;
  return true;
}

void SymMatrix::add_scaled_outer(const std::vector<double>& v, double w) {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("add_scaled_outer: vector length mismatch");
  }
  for (int r = 0; r < dim_; ++r) {
    const double wr = w * v[static_cast<size_t>(r)];
    if (wr == 0.0) continue;
    double* row = &a_[static_cast<size_t>(r) * dim_];
    for (int c = 0; c < dim_; ++c) row[c] += wr * v[static_cast<size_t>(c)];
  }
}

std::vector<double> SymMatrix::apply(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("SymMatrix::apply: vector length mismatch");
  }
  std::vector<double> out(static_cast<size_t>(dim_), 0.0);
  for (int r = 0; r < dim_; ++r) {
    const double* row = &a_[static_cast<size_t>(r) * dim_];
    double s = 0.0;
    for (int c = 0; c < dim_; ++c) s += row[c] * v[static_cast<size_t>(c)];
    out[static_cast<size_t>(r)] = s;
  }
  return out;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("SymMatrix+=: dim mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("SymMatrix-=: dim mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  for (double& x : a_) x *= s;
  return *this;
}

namespace {

double off_diagonal_norm(const SymMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = r + 1; c < m.dim(); ++c) s += m.at(r, c) * m.at(r, c);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem eigen_sym(const SymMatrix& input) {
  if (!input.is_symmetric(1e-12)) {
    throw std::invalid_argument("eigen_sym: matrix is not symmetric");
  }
  const int n = input.dim();
  SymMatrix a = input;
  // V accumulates the rotations; columns are eigenvectors.
  std::vector<std::vector<double>> v(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;

  constexpr double kOffTol = 1e-12;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffTol) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // rotate rows/columns p and q
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a.at(k, p);
          const double akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(p, k) = a.at(k, p);
          a.at(k, q) = s * akp + c * akq;
          a.at(q, k) = a.at(k, q);
        }
        const double app = a.at(p, p);
        const double aqq = a.at(q, q);
        a.at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a.at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v[static_cast<size_t>(k)][static_cast<size_t>(p)];
          const double vkq = v[static_cast<size_t>(k)][static_cast<size_t>(q)];
          v[static_cast<size_t>(k)][static_cast<size_t>(p)] = c * vkp - s * vkq;
          v[static_cast<size_t>(k)][static_cast<size_t>(q)] = s * vkp + c * vkq;
        }
      }
    }
  }

  EigenSystem sys;
  sys.values.resize(static_cast<size_t>(n));
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a.at(x, x) < a.at(y, y); });
  sys.vectors.assign(static_cast<size_t>(n),
                     std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int k = 0; k < n; ++k) {
    const int col = order[static_cast<size_t>(k)];
    sys.values[static_cast<size_t>(k)] = a.at(col, col);
    for (int r = 0; r < n; ++r) {
      sys.vectors[static_cast<size_t>(k)][static_cast<size_t>(r)] =
          v[static_cast<size_t>(r)][static_cast<size_t>(col)];
    }
  }
  return sys;
}

double trace_distance(const SymMatrix& rho0, const SymMatrix& rho1) {
  if (rho0.dim() != rho1.dim()) {
    throw std::invalid_argument("trace_distance: dimension mismatch (" +
                                std::to_string(rho0.dim()) + " vs " +
                                std::to_string(rho1.dim()) + ")");
  }
  const EigenSystem sys = eigen_sym(rho0 - rho1);
  double s = 0.0;
  for (double lam : sys.values) s += std::fabs(lam);
  return 0.5 * s;
}

std::vector<PovmViolation> validate_povm(const Povm& p) {
  std::vector<PovmViolation> out;
  if (p.elements.empty()) {
    out.push_back({"(sum)", "completeness", 1.0});
    return out;
  }
  const int dim = p.elements.front().second.dim();
  SymMatrix sum(dim);
  for (const auto& [label, e] : p.elements) {
    if (e.dim() != dim) {
      out.push_back({label, "dimension", static_cast<double>(e.dim() - dim)});
      continue;
    }
    if (!e.is_symmetric(1e-12)) {
      out.push_back({label, "symmetry", 0.0});
      continue;
    }
    const auto sys = eigen_sym(e);
    const double min_eig = sys.values.front();
    if (min_eig < -1e-10) {
      out.push_back({label, "positivity", min_eig});
    }
    sum += e;
  }
  sum -= SymMatrix::identity(dim);
  const double resid = sum.max_abs();
  if (resid > 1e-10) {
    out.push_back({"(sum)", "completeness", resid});
  }
  return out;
}

}  // namespace qct
