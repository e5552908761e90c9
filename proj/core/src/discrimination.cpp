#include "qct/discrimination.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qct {

namespace {

void check_omega(double omega, const char* fn) {
  if (!(omega >= 0.0 && omega <= kPi / 2.0)) {
    throw std::invalid_argument(std::string(fn) + ": omega " +
                                std::to_string(omega) +
                                " outside [0, pi/2]");
  }
}

void check_m(int m, const char* fn, int max_m = 0) {
  if (m < 1) {
    throw std::invalid_argument(std::string(fn) + ": m " + std::to_string(m) +
                                " must be >= 1");
  }
  if (max_m > 0 && m > max_m) {
    throw std::invalid_argument(std::string(fn) + ": m " + std::to_string(m) +
                                " exceeds resource limit " +
                                std::to_string(max_m));
  }
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double helstrom_error(double omega) {
  check_omega(omega, "helstrom_error");
  return 0.5 * (1.0 - std::sin(omega));
}

double conclusive_rate(double omega) {
  check_omega(omega, "conclusive_rate");
  return 1.0 - std::cos(omega);
}

double false_claim_pass(double omega) {
  check_omega(omega, "false_claim_pass");
  const double c = std::cos(omega);
  return c * c;
}

Povm build_unambiguous_povm(double omega) {
  if (!(omega > 0.0 && omega <= kPi / 2.0)) {
    throw std::invalid_argument(
        "build_unambiguous_povm: omega " + std::to_string(omega) +
        " outside (0, pi/2]; at omega = 0 the hypotheses coincide and no "
        "conclusive outcome exists");
  }
  const double half = omega / 2.0;
  // conclusive-a is proportional to the projector onto the state
  // orthogonal to psi(1-a); the scale 1/(1 + cos omega) is the largest
  // that keeps the inconclusive element positive.
  const double scale = 1.0 / (1.0 + std::cos(omega));
  // psi(0) at +half, psi(1) at -half; orthogonal complements at +-(half + pi/2)
  const auto projector = [](double angle, double w) {
    SymMatrix e(2);
    const double x = std::cos(angle);
    const double y = std::sin(angle);
    e.at(0, 0) = w * x * x;
    e.at(0, 1) = w * x * y;
    e.at(1, 0) = w * x * y;
    e.at(1, 1) = w * y * y;
    return e;
  };
  const SymMatrix e0 = projector(-half + kPi / 2.0, scale);  // kills psi(1)
  const SymMatrix e1 = projector(half + kPi / 2.0, scale);   // kills psi(0)
  SymMatrix inconclusive = SymMatrix::identity(2);
  inconclusive -= e0;
  inconclusive -= e1;
  Povm p;
  p.elements.emplace_back(kLabelConclusive0, e0);
  p.elements.emplace_back(kLabelConclusive1, e1);
  p.elements.emplace_back(kLabelInconclusive, inconclusive);
  return p;
}

std::vector<ParityBlock> parity_blocks(int m, double omega) {
  check_m(m, "parity_blocks");
  check_omega(omega, "parity_blocks");
  const double c = std::cos(omega / 2.0);
  const double s = std::sin(omega / 2.0);
  std::vector<ParityBlock> blocks;
  const int k_max = m / 2;
  for (int k = 0; k <= k_max; ++k) {
    ParityBlock b;
    b.k = k;
    // Basis vectors pair up with their bitwise complements; the middle
    // sector of even m pairs within itself, so only half of its
    // C(m, m/2) vectors start a block.
    b.multiplicity = (2 * k == m) ? binomial(m, k) / 2 : binomial(m, k);
    const double d0 = std::pow(c, 2 * (m - k)) * std::pow(s, 2 * k);
    const double d1 = std::pow(c, 2 * k) * std::pow(s, 2 * (m - k));
    const double off = std::pow(c, m) * std::pow(s, m);
    b.trace = d0 + d1;
    b.block_plus.at(0, 0) = d0;
    b.block_plus.at(1, 1) = d1;
    b.block_plus.at(0, 1) = off;
    b.block_plus.at(1, 0) = off;
    b.block_minus = b.block_plus;
    b.block_minus.at(0, 1) = -off;
    b.block_minus.at(1, 0) = -off;
    // Normalized by its trace the block is the projector pair of the
    // states cos(T/2)|0> +- sin(T/2)|1>.
    const double amp0 = std::sqrt(d0);
    const double amp1 = std::sqrt(d1);
    b.block_angle = 2.0 * std::atan2(amp1, amp0);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

double parity_error_exact(int m, double omega) {
  check_m(m, "parity_error_exact");
  check_omega(omega, "parity_error_exact");
  return 0.5 * (1.0 - std::pow(std::sin(omega), m));
}

double parity_conclusive_bound(int m, double omega) {
  check_m(m, "parity_conclusive_bound");
  check_omega(omega, "parity_conclusive_bound");
  return std::pow(std::sin(omega), m);
}

SymMatrix parity_density_matrix(int parity, int m, double omega) {
  check_m(m, "parity_density_matrix", 10);
  check_omega(omega, "parity_density_matrix");
  if (parity != 0 && parity != 1) {
    throw std::invalid_argument("parity_density_matrix: parity must be 0 or 1");
  }
  const int dim = 1 << m;
  SymMatrix rho(dim);
  const double weight = 1.0 / static_cast<double>(1 << (m - 1));
  const double half = omega / 2.0;
  ProductState state;
  state.factors.resize(static_cast<size_t>(m));
  for (unsigned bits = 0; bits < (1u << m); ++bits) {
    if ((std::popcount(bits) & 1) != parity) continue;
    for (int k = 0; k < m; ++k) {
      const bool one = (bits >> (m - 1 - k)) & 1u;
      state.factors[static_cast<size_t>(k)].half_angle = one ? -half : half;
    }
    rho.add_scaled_outer(dense_amplitudes(state), weight);
  }
  return rho;
}

double parity_error_oracle(int m, double omega) {
  check_m(m, "parity_error_oracle", 10);
  check_omega(omega, "parity_error_oracle");
  const SymMatrix rho0 = parity_density_matrix(0, m, omega);
  const SymMatrix rho1 = parity_density_matrix(1, m, omega);
  return 0.5 * (1.0 - trace_distance(rho0, rho1));
}

}  // namespace qct
