#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace etapair::dicke {

/// Permutation-symmetric n-qubit state with k excitations, the qubit
/// picture of the k-pair condensate (0 = empty site, 1 = paired site).
struct DickeSpec {
  int n = 1;
  int k = 0;
};

/// The two-site reduction of a Dicke state in closed form:
/// rho_12 = a |00><00| + b |11><11| + c |psi+><psi+| with
/// psi+ = (|01> + e^{i phase} |10>)/sqrt(2).
struct TwoSiteABC {
  double a = 0.0;  // k(k-1)/(n(n-1))
  double b = 0.0;  // (n-k)(n-k-1)/(n(n-1))
  double c = 0.0;  // 2k(n-k)/(n(n-1))
  double coherence_phase = 0.0;
};

/// Exact binomial coefficient, computed in arbitrary-precision integers
/// and converted to double at the end. Throws std::length_error once the
/// result would overflow double range (n > 1000).
double binomial(int n, int k);

/// Full 2^n amplitude vector: C(n,k)^{-1/2} on every weight-k bitstring.
/// Site s maps to bit (n-1-s), so kets read left to right. n <= 24.
Eigen::VectorXcd dicke_state(const DickeSpec& spec);

/// Closed-form (a, b, c) triple; requires n >= 2.
TwoSiteABC two_site_abc(const DickeSpec& spec);

/// Assembles the 4x4 density matrix in the basis {|00>,|01>,|10>,|11>}.
Eigen::Matrix4cd assemble_two_site_rho(const TwoSiteABC& abc);

/// Partial trace onto the listed sites (distinct, at most 12); the
/// brute-force counterpart of two_site_abc.
Eigen::MatrixXcd reduce_to_sites(const Eigen::VectorXcd& state, std::span<const int> sites);

/// Exact separability verdict for the two-site reduction: entangled iff
/// ab < c^2/4, evaluated in integer arithmetic. True exactly when
/// 1 <= k <= n-1.
bool is_two_site_entangled(const DickeSpec& spec);

/// Weights of the m-site reduction of |n,k>: the hypergeometric
/// distribution p_j = C(m,j) C(n-m,k-j) / C(n,k).
std::vector<double> hypergeometric_weights(const DickeSpec& spec, int m);

/// Von Neumann entropy (nats) of the m-site reduction, 1 <= m <= n-1,
/// via the hypergeometric weights. Equals the binary entropy of k/n at
/// m = 1 and vanishes only for k = 0 or k = n.
double block_entropy(const DickeSpec& spec, int m);

}  // namespace etapair::dicke
