#pragma once

#include <complex>

#include "etapair/fock.hpp"

namespace etapair::eta {

/// Parameters of the pair-condensate state (eta^dag_q)^k |0> with
/// eta^dag_q = sum_i e^{iq*i} c^dag_{i,up} c^dag_{i,down}.
struct EtaSpec {
  int n_sites = 1;
  int k_pairs = 0;
  double momentum_phase = 0.0;  // q, radians per site
};

struct OdlroReport {
  int site_i = 0;
  int site_j = 0;
  std::complex<double> correlator;  // <c^dag_{j,up} c^dag_{j,down} c_{i,down} c_{i,up}>
  double closed_form = 0.0;         // k(n-k)/(n(n-1)) for the uniform pair state
  double alpha_limit = 0.0;         // x(1-x) at x = k/n, the large-n limit of closed_form
};

/// Raw, unnormalized (eta^dag)^k |0>. Its norm is k! * sqrt(C(n,k)); the
/// bare prefactor C(n,k)^{-1/2} alone would not normalize it.
fock::FockVector eta_dagger_power(const EtaSpec& spec);

/// Unit-norm pair condensate: (eta^dag)^k |0> divided by its computed norm.
/// For q = 0 this is the equal superposition of all C(n,k) pair placements.
fock::FockVector build_eta_state(const EtaSpec& spec);

/// Pair-hopping correlator between distinct sites i and j, with the
/// closed-form prediction for a k-pair condensate attached. k is inferred
/// from the state's mean double occupancy.
OdlroReport odlro_correlator(const fock::FockVector& state, int i, int j);

/// Large-n limit of k(n-k)/(n(n-1)) at fixed filling x = k/n. Defined on
/// the open interval (0,1) and strictly positive there.
double asymptotic_alpha(double x);

}  // namespace etapair::eta
