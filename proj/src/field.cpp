#include "etapair/field.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "etapair/parallel.hpp"

namespace etapair::field {

namespace {

void validate(const HarmonicChainSpec& spec) {
  if (spec.n_osc < 1) throw std::domain_error("chain needs at least one oscillator");
  if (!(spec.mass > 0.0)) throw std::domain_error("mass must be positive");
  if (!(spec.spacing > 0.0)) throw std::domain_error("lattice spacing must be positive");
}

Eigen::MatrixXd restrict_to(const Eigen::MatrixXd& m, std::span<const int> idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd out(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      out(r, c) = m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd coupling_matrix(const HarmonicChainSpec& spec) {
  validate(spec);
  const int n = spec.n_osc;
  const double inv_a2 = 1.0 / (spec.spacing * spec.spacing);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = spec.mass * spec.mass + 2.0 * inv_a2;
    if (i + 1 < n) {
      k(i, i + 1) = -inv_a2;
      k(i + 1, i) = -inv_a2;
    }
  }
  return k;
}

CovarianceData ground_covariance(const Eigen::MatrixXd& k_matrix) {
  if (k_matrix.rows() != k_matrix.cols()) {
    throw std::domain_error("coupling matrix must be square");
  }
  const double scale = std::max(1.0, k_matrix.cwiseAbs().maxCoeff());
  if ((k_matrix - k_matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::domain_error("coupling matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k_matrix);
  if (solver.eigenvalues().minCoeff() <= 0.0) {
    throw std::domain_error("coupling matrix must be positive definite");
  }
  const Eigen::VectorXd omega = solver.eigenvalues().cwiseSqrt();
  const Eigen::MatrixXd& v = solver.eigenvectors();
  CovarianceData cov;
  cov.x = 0.5 * v * omega.cwiseInverse().asDiagonal() * v.transpose();
  cov.p = 0.5 * v * omega.asDiagonal() * v.transpose();
  return cov;
}

std::vector<double> symplectic_spectrum(const CovarianceData& cov, std::span<const int> modes) {
  const Eigen::Index n = cov.x.rows();
  if (cov.p.rows() != n || cov.x.cols() != n || cov.p.cols() != n) {
    throw std::domain_error("covariance blocks must be square and equally sized");
  }
  if (modes.empty()) throw std::domain_error("mode set must be nonempty");
  for (int m : modes) {
    if (m < 0 || m >= n) throw std::domain_error("mode index out of range");
  }

  const Eigen::MatrixXd xb = restrict_to(cov.x, modes);
  const Eigen::MatrixXd pb = restrict_to(cov.p, modes);
  // eig(X_B P_B) via the symmetric similar matrix L^T P_B L with X_B = L L^T.
  Eigen::LLT<Eigen::MatrixXd> llt(xb);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("position covariance block is not positive definite");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l.transpose() * pb * l,
                                                        Eigen::EigenvaluesOnly);
  std::vector<double> nus;
  nus.reserve(modes.size());
  for (double lambda : solver.eigenvalues()) {
    const double nu = std::sqrt(std::max(lambda, 0.0));
    if (nu < 0.5 - 1e-8) {
      throw std::domain_error("symplectic eigenvalue " + std::to_string(nu) +
                              " violates the uncertainty bound");
    }
    nus.push_back(std::max(nu, 0.5));
  }
  return nus;
}

std::vector<double> symplectic_spectrum(const CovarianceData& cov) {
  std::vector<int> all(static_cast<std::size_t>(cov.x.rows()));
  std::iota(all.begin(), all.end(), 0);
  return symplectic_spectrum(cov, all);
}

double gaussian_block_entropy(const CovarianceData& cov, std::span<const int> modes) {
  if (static_cast<Eigen::Index>(modes.size()) >= cov.x.rows()) {
    throw std::domain_error("block must be a proper subset of the chain");
  }
  double entropy = 0.0;
  for (double nu : symplectic_spectrum(cov, modes)) {
    entropy += (nu + 0.5) * std::log(nu + 0.5);
    if (nu > 0.5) entropy -= (nu - 0.5) * std::log(nu - 0.5);
  }
  return std::max(entropy, 0.0);
}

double gaussian_block_entropy(const CovarianceData& cov, BlockRange block) {
  if (block.end <= block.begin) throw std::domain_error("block range is empty");
  std::vector<int> modes(static_cast<std::size_t>(block.end - block.begin));
  std::iota(modes.begin(), modes.end(), block.begin);
  return gaussian_block_entropy(cov, modes);
}

EntropyFit mass_scan_fit(int n_osc, double spacing, std::span<const double> masses,
                         unsigned threads) {
  if (masses.size() < 4) throw std::domain_error("mass scan needs at least 4 samples");
  if (n_osc < 2) throw std::domain_error("mass scan needs at least two oscillators");
  for (double m : masses) {
    const double ma = m * spacing;
    if (!(ma > 1.0 / n_osc && ma < 1.0)) {
      throw std::domain_error("mass " + std::to_string(m) +
                              " leaves the validity window 1/n < m a < 1");
    }
  }

  EntropyFit fit;
  fit.samples.reserve(masses.size());
  for (double m : masses) fit.samples.emplace_back(m, 0.0);
  parallel_for(masses.size(), threads, [&](std::size_t i) {
    const HarmonicChainSpec spec{.n_osc = n_osc, .mass = masses[i], .spacing = spacing};
    const CovarianceData cov = ground_covariance(coupling_matrix(spec));
    fit.samples[i].second = gaussian_block_entropy(cov, BlockRange{0, n_osc / 2});
  });

  const auto count = static_cast<double>(masses.size());
  double t_mean = 0.0, s_mean = 0.0;
  for (const auto& [m, s] : fit.samples) {
    t_mean += std::log(1.0 / (m * spacing));
    s_mean += s;
  }
  t_mean /= count;
  s_mean /= count;

  double stt = 0.0, sts = 0.0, sss = 0.0;
  for (const auto& [m, s] : fit.samples) {
    const double dt = std::log(1.0 / (m * spacing)) - t_mean;
    const double ds = s - s_mean;
    stt += dt * dt;
    sts += dt * ds;
    sss += ds * ds;
  }
  if (stt < 1e-24) throw std::domain_error("degenerate fit: masses do not vary");

  fit.slope = sts / stt;
  fit.intercept = s_mean - fit.slope * t_mean;
  fit.r_squared = sss > 0.0 ? (sts * sts) / (stt * sss) : 1.0;
  return fit;
}

}  // namespace etapair::field
