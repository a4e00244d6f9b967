#include "etapair/dicke.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace etapair::dicke {

namespace {

using big_int = boost::multiprecision::cpp_int;

// C(1000,500) ~ 2.7e299 is still inside double range; larger n may not be.
constexpr int kBinomialCap = 1000;

big_int binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  big_int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: a product of i consecutive integers divides by i!
  }
  return result;
}

void validate_spec(const DickeSpec& spec) {
  if (spec.n < 1) throw std::domain_error("Dicke state needs at least one site");
  if (spec.k < 0 || spec.k > spec.n) {
    throw std::domain_error("excitation count " + std::to_string(spec.k) +
                            " must lie in [0, " + std::to_string(spec.n) + "]");
  }
}

}  // namespace

double binomial(int n, int k) {
  if (n < 0) throw std::domain_error("binomial needs n >= 0");
  if (n > kBinomialCap) {
    throw std::length_error("binomial overflows double range beyond n = " +
                            std::to_string(kBinomialCap));
  }
  return binomial_exact(n, k).convert_to<double>();
}

Eigen::VectorXcd dicke_state(const DickeSpec& spec) {
  validate_spec(spec);
  if (spec.n > 24) {
    throw std::length_error("dense Dicke state limited to 24 sites");
  }
  const std::uint64_t dim = std::uint64_t{1} << spec.n;
  const double amp = 1.0 / std::sqrt(binomial(spec.n, spec.k));
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (std::popcount(b) == spec.k) state(static_cast<Eigen::Index>(b)) = amp;
  }
  return state;
}

TwoSiteABC two_site_abc(const DickeSpec& spec) {
  validate_spec(spec);
  if (spec.n < 2) throw std::domain_error("two-site reduction needs n >= 2");
  const double n = spec.n;
  const double k = spec.k;
  TwoSiteABC abc;
  abc.a = k * (k - 1) / (n * (n - 1));
  abc.b = (n - k) * (n - k - 1) / (n * (n - 1));
  abc.c = 2 * k * (n - k) / (n * (n - 1));
  return abc;
}

Eigen::Matrix4cd assemble_two_site_rho(const TwoSiteABC& abc) {
  const auto phase = std::polar(1.0, abc.coherence_phase);
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = abc.a;
  rho(3, 3) = abc.b;
  rho(1, 1) = abc.c / 2.0;
  rho(2, 2) = abc.c / 2.0;
  rho(1, 2) = abc.c / 2.0 * std::conj(phase);
  rho(2, 1) = abc.c / 2.0 * phase;
  return rho;
}

Eigen::MatrixXcd reduce_to_sites(const Eigen::VectorXcd& state, std::span<const int> sites) {
  const Eigen::Index dim = state.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::domain_error("state length must be a power of two");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));

  std::vector<int> kept(sites.begin(), sites.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty()) throw std::domain_error("need at least one kept site");
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::domain_error("kept sites must be distinct");
  }
  if (kept.front() < 0 || kept.back() >= n) {
    throw std::domain_error("site index out of range");
  }
  if (kept.size() > 12) {
    throw std::length_error("reduction limited to 12 kept sites");
  }

  const int n_kept = static_cast<int>(kept.size());
  std::vector<int> traced;
  for (int s = 0; s < n; ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }

  // Site s lives at bit (n-1-s) of the full index; kept sites keep their
  // relative order in the reduced index, first site most significant.
  auto full_index = [&](std::uint64_t kept_bits, std::uint64_t traced_bits) {
    std::uint64_t idx = 0;
    for (int j = 0; j < n_kept; ++j) {
      if ((kept_bits >> (n_kept - 1 - j)) & 1) idx |= std::uint64_t{1} << (n - 1 - kept[j]);
    }
    for (std::size_t j = 0; j < traced.size(); ++j) {
      if ((traced_bits >> j) & 1) idx |= std::uint64_t{1} << (n - 1 - traced[j]);
    }
    return idx;
  };

  const std::uint64_t kept_dim = std::uint64_t{1} << n_kept;
  const std::uint64_t traced_dim = std::uint64_t{1} << traced.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(kept_dim),
                                                static_cast<Eigen::Index>(kept_dim));
  for (std::uint64_t r = 0; r < kept_dim; ++r) {
    for (std::uint64_t c = 0; c < kept_dim; ++c) {
      std::complex<double> sum = 0.0;
      for (std::uint64_t t = 0; t < traced_dim; ++t) {
        sum += state(static_cast<Eigen::Index>(full_index(r, t))) *
               std::conj(state(static_cast<Eigen::Index>(full_index(c, t))));
      }
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
    }
  }
  return rho;
}

bool is_two_site_entangled(const DickeSpec& spec) {
  validate_spec(spec);
  if (spec.n < 2) throw std::domain_error("two-site verdict needs n >= 2");
  // PPT boundary in integers: ab < c^2/4 with the common denominator cleared.
  const long long k = spec.k;
  const long long n = spec.n;
  return k * (k - 1) * (n - k) * (n - k - 1) < (k * (n - k)) * (k * (n - k));
}

std::vector<double> hypergeometric_weights(const DickeSpec& spec, int m) {
  validate_spec(spec);
  if (m < 1 || m > spec.n - 1) {
    throw std::domain_error("block size must lie in [1, n-1]");
  }
  if (spec.n > kBinomialCap) {
    throw std::length_error("weights overflow double range beyond n = " +
                            std::to_string(kBinomialCap));
  }
  const big_int total = binomial_exact(spec.n, spec.k);
  const int j_lo = std::max(0, spec.k - (spec.n - m));
  const int j_hi = std::min(m, spec.k);
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(j_hi - j_lo + 1));
  for (int j = j_lo; j <= j_hi; ++j) {
    const big_int num = binomial_exact(m, j) * binomial_exact(spec.n - m, spec.k - j);
    weights.push_back(num.convert_to<double>() / total.convert_to<double>());
  }
  return weights;
}

double block_entropy(const DickeSpec& spec, int m) {
  double entropy = 0.0;
  for (double p : hypergeometric_weights(spec, m)) {
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return std::max(entropy, 0.0);
}

}  // namespace etapair::dicke
