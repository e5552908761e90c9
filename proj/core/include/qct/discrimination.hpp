#pragma once

#include "qct/qmath.hpp"

#include <vector>

namespace qct {

// Two-hypothesis quantities for a pure-state pair at angle omega,
// encoded as psi(0) at +omega/2 and psi(1) at -omega/2 in the real plane.

/// Minimum error probability of guessing the bit with the best
/// measurement at equal priors: (1/2)(1 - sin omega). Domain [0, pi/2].
double helstrom_error(double omega);

/// Optimal probability of an error-free (conclusive) identification:
/// 1 - cos omega. Domain [0, pi/2].
double conclusive_rate(double omega);

/// Probability that a party who holds psi(0) but claims psi(1) passes
/// the rank-1 test for the claim: cos^2 omega. Domain [0, pi/2].
double false_claim_pass(double omega);

inline constexpr const char* kLabelConclusive0 = "conclusive-0";
inline constexpr const char* kLabelConclusive1 = "conclusive-1";
inline constexpr const char* kLabelInconclusive = "inconclusive";

/// Three-outcome measurement realizing conclusive_rate with zero
/// misidentification. Accepts omega in (0, pi/2]; at pi/2 the
/// inconclusive element degenerates to zero (projective measurement);
/// omega <= 0 has no conclusive outcome and is rejected.
Povm build_unambiguous_povm(double omega);

/// One 2x2 sector of the parity density matrices: the pair of basis
/// vectors with Hamming weights (k, m-k). With c = cos(omega/2),
/// s = sin(omega/2), the even-parity block is
///   [[c^(2(m-k)) s^(2k),  c^m s^m], [c^m s^m,  c^(2k) s^(2(m-k))]]
/// and the odd-parity block flips the off-diagonal sign.
struct ParityBlock {
  int k = 0;
  long long multiplicity = 0;  // number of identical sectors
  double trace = 0.0;          // weight p_k of one sector
  SymMatrix block_plus{2};     // even parity
  SymMatrix block_minus{2};    // odd parity
  double block_angle = 0.0;    // angle between the normalized pure pair
};

/// Sector decomposition for m encoded bits. k runs to floor(m/2); for
/// even m the self-paired middle sector appears with multiplicity
/// C(m, m/2)/2. The multiplicity-weighted traces sum to 1.
std::vector<ParityBlock> parity_blocks(int m, double omega);

/// Minimum error probability for guessing the parity of m bits encoded
/// in independent pure-state pairs at angle omega: (1/2)(1 - sin^m omega).
double parity_error_exact(int m, double omega);

/// Upper bound sin^m(omega) on the conclusive rate for the parity bit,
/// equal to 1 - 2*parity_error_exact(m, omega).
double parity_conclusive_bound(int m, double omega);

/// Brute-force density matrix of the given parity class: the uniform
/// mixture 2^-(m-1) * sum of product-state projectors over all bit
/// strings with that parity. dim 2^m; m <= 10.
SymMatrix parity_density_matrix(int parity, int m, double omega);

/// Independent oracle for parity_error_exact:
/// (1/2)(1 - trace_distance(rho0, rho1)) on the brute-force matrices.
double parity_error_oracle(int m, double omega);

}  // namespace qct
