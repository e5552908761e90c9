#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qct {

inline constexpr double kPi = 3.14159265358979323846;

/// Pure qubit state cos(a)|0> + sin(a)|1> in the real |0>/|1> plane,
/// represented by the angle a alone. Unit norm holds by construction;
/// there are no stored amplitudes to drift.
struct PureState {
  double half_angle = 0.0;

  friend bool operator==(const PureState&, const PureState&) = default;
};

/// <u|v> = cos(u.half_angle - v.half_angle). Symmetric, in [-1, 1].
double overlap(PureState u, PureState v);

/// Tensor product of pure single-qubit factors.
struct ProductState {
  std::vector<PureState> factors;

  int particle_count() const { return static_cast<int>(factors.size()); }

  friend bool operator==(const ProductState&, const ProductState&) = default;
};

/// Product of the pairwise factor overlaps. Long products are evaluated
/// in log space (sign * exp(sum of log|cos|)); an exactly-zero factor
/// overlap yields exactly 0. Throws std::invalid_argument on factor-count
/// mismatch.
double product_overlap(const ProductState& p, const ProductState& q);

/// Pass probability of the rank-1 test |target><target| on `state`:
/// product_overlap(state, target)^2. Same dimension rules as
/// product_overlap.
double born_probability(const ProductState& state, const ProductState& target);

/// Explicit 2^n amplitude vector of a product state, basis ordered
/// |00..0>, |00..1>, ..., |11..1> with the first factor on the most
/// significant bit. Restricted to n <= 10.
std::vector<double> dense_amplitudes(const ProductState& p);

/// Dense real symmetric matrix, dim in [1, 1024]. Used for density
/// matrices and measurement operators.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);

  static SymMatrix identity(int dim);

  int dim() const { return dim_; }
  double& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  double at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  double trace() const;
  double max_abs() const;
  bool is_symmetric(double tol = 1e-12) const;

  /// A += w * v v^T (v must have length dim).
  void add_scaled_outer(const std::vector<double>& v, double w);
  /// A v
  std::vector<double> apply(const std::vector<double>& v) const;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(double s);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int dim_;
  std::vector<double> a_;
};

struct EigenSystem {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<double>> vectors;   // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is
/// <= 1e-12 (at most 100 sweeps). Input must be symmetric within 1e-12,
/// else std::invalid_argument.
EigenSystem eigen_sym(const SymMatrix& m);

/// (1/2) * sum |eigenvalues(rho0 - rho1)|. Dimension mismatch throws.
double trace_distance(const SymMatrix& rho0, const SymMatrix& rho1);

/// Generalized measurement: labelled positive elements summing to identity.
struct Povm {
  std::vector<std::pair<std::string, SymMatrix>> elements;
};

struct PovmViolation {
  std::string element;    // label of the offending element, or "(sum)"
  std::string condition;  // "positivity" | "completeness" | "symmetry" | "dimension"
  double residual;
};

/// Checks positivity of each element (min eigenvalue >= -1e-10) and
/// completeness (elements sum to identity within 1e-10 entrywise).
/// Returns the violations instead of throwing; empty means valid.
std::vector<PovmViolation> validate_povm(const Povm& p);

}  // namespace qct
