#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

namespace etapair::field {

enum class Boundary { Dirichlet };

/// Discretized 1+1d free scalar of mass m on n_osc lattice points with
/// spacing a (the UV cutoff). m > 0; the massless chain has a divergent
/// zero mode.
struct HarmonicChainSpec {
  int n_osc = 2;
  double mass = 1.0;
  double spacing = 1.0;
  Boundary boundary = Boundary::Dirichlet;
};

/// Position/momentum covariance blocks <phi_i phi_j> and <pi_i pi_j> of a
/// Gaussian state; the ground state has X P = I/4.
struct CovarianceData {
  Eigen::MatrixXd x;
  Eigen::MatrixXd p;
};

/// Half-open range [begin, end) of oscillator indices.
struct BlockRange {
  int begin = 0;
  int end = 0;
};

struct EntropyFit {
  std::vector<std::pair<double, double>> samples;  // (mass, half-chain entropy)
  double slope = 0.0;       // of S against ln(1/(m a))
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Tridiagonal coupling matrix: diagonal m^2 + 2/a^2, off-diagonal -1/a^2,
/// Dirichlet ends. Positive definite for m > 0.
Eigen::MatrixXd coupling_matrix(const HarmonicChainSpec& spec);

/// Ground-state covariance X = K^{-1/2}/2, P = K^{1/2}/2 by spectral
/// decomposition. K must be symmetric positive definite.
CovarianceData ground_covariance(const Eigen::MatrixXd& k_matrix);

/// Symplectic eigenvalues sqrt(eig(X_B P_B)) of the covariance restricted
/// to the listed modes. Values below 1/2 - 1e-8 violate the uncertainty
/// bound and raise a domain error; values within that window clamp to 1/2.
std::vector<double> symplectic_spectrum(const CovarianceData& cov, std::span<const int> modes);

/// Spectrum of the full chain; all 1/2 for a pure ground state.
std::vector<double> symplectic_spectrum(const CovarianceData& cov);

/// Entanglement entropy (nats) of a proper nonempty block:
/// S = sum (nu+1/2)ln(nu+1/2) - (nu-1/2)ln(nu-1/2).
double gaussian_block_entropy(const CovarianceData& cov, BlockRange block);
double gaussian_block_entropy(const CovarianceData& cov, std::span<const int> modes);

/// Half-chain entropy for each mass plus an affine fit of S against
/// ln(1/(m a)). Needs at least 4 masses, each inside the validity window
/// 1/n_osc < m a < 1, and a non-degenerate spread of masses. Masses are
/// independent, so the scan maps over them with `threads` workers
/// (0 = all cores).
EntropyFit mass_scan_fit(int n_osc, double spacing, std::span<const double> masses,
                         unsigned threads = 1);

}  // namespace etapair::field
