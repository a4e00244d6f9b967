#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etapair/dicke.hpp"
#include "etapair/eta.hpp"
#include "etapair/field.hpp"
#include "etapair/fock.hpp"
#include "etapair/gauge.hpp"
#include "etapair/spin.hpp"
#include "etapair/witness.hpp"

namespace py = pybind11;

namespace {

using namespace etapair;

std::vector<fock::LadderTerm> to_terms(
    const std::vector<std::tuple<int, fock::Spin, fock::Ladder>>& ops) {
  std::vector<fock::LadderTerm> terms;
  terms.reserve(ops.size());
  for (const auto& [site, spin, kind] : ops) {
    terms.push_back({{site, spin}, kind});
  }
  return terms;
}

gauge::PhysicalConstants constants_for(const std::string& units) {
  if (units == "si") return gauge::PhysicalConstants::si();
  if (units == "natural") return gauge::PhysicalConstants::natural();
  throw std::domain_error("units must be 'si' or 'natural'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pair-condensate states, entanglement witnesses, exchange-phase "
            "constraints, and Gaussian field entropies";

  // ---- fock ----
  py::enum_<fock::Spin>(m, "Spin").value("Up", fock::Spin::Up).value("Down", fock::Spin::Down);
  py::enum_<fock::Ladder>(m, "Ladder")
      .value("Create", fock::Ladder::Create)
      .value("Annihilate", fock::Ladder::Annihilate);

  py::class_<fock::FockVector>(m, "FockVector")
      .def_static("vacuum", &fock::FockVector::vacuum, py::arg("n_sites"))
      .def_property_readonly("n_sites", &fock::FockVector::n_sites)
      .def("amplitudes",
           [](const fock::FockVector& v) {
             py::dict out;
             for (const auto& [bits, amp] : v.amplitudes()) out[py::int_(bits)] = amp;
             return out;
           })
      .def("amplitude", &fock::FockVector::amplitude, py::arg("bits"))
      .def("norm", &fock::FockVector::norm)
      .def("normalized", &fock::FockVector::normalized)
      .def("is_normalized", &fock::FockVector::is_normalized, py::arg("tol") = 1e-12)
      .def("__len__", &fock::FockVector::size);

  m.def(
      "apply_ladder",
      [](const fock::FockVector& state, int site, fock::Spin spin, fock::Ladder kind) {
        return fock::apply_ladder(state, {site, spin}, kind);
      },
      py::arg("state"), py::arg("site"), py::arg("spin"), py::arg("kind"));
  m.def(
      "apply_string",
      [](const fock::FockVector& state,
         const std::vector<std::tuple<int, fock::Spin, fock::Ladder>>& ops) {
        return fock::apply_string(state, to_terms(ops));
      },
      py::arg("state"), py::arg("ops"));
  m.def("inner_product", &fock::inner_product, py::arg("a"), py::arg("b"));
  m.def(
      "expectation",
      [](const fock::FockVector& state,
         const std::vector<std::tuple<int, fock::Spin, fock::Ladder>>& ops) {
        return fock::expectation(state, to_terms(ops));
      },
      py::arg("state"), py::arg("ops"));

  // ---- eta ----
  py::class_<eta::OdlroReport>(m, "OdlroReport")
      .def_readonly("site_i", &eta::OdlroReport::site_i)
      .def_readonly("site_j", &eta::OdlroReport::site_j)
      .def_readonly("correlator", &eta::OdlroReport::correlator)
      .def_readonly("closed_form", &eta::OdlroReport::closed_form)
      .def_readonly("alpha_limit", &eta::OdlroReport::alpha_limit);

  m.def(
      "build_eta_state",
      [](int n, int k, double q) { return eta::build_eta_state({n, k, q}); },
      py::arg("n_sites"), py::arg("k_pairs"), py::arg("momentum_phase") = 0.0);
  m.def(
      "eta_dagger_power",
      [](int n, int k, double q) { return eta::eta_dagger_power({n, k, q}); },
      py::arg("n_sites"), py::arg("k_pairs"), py::arg("momentum_phase") = 0.0);
  m.def("odlro_correlator", &eta::odlro_correlator, py::arg("state"), py::arg("i"), py::arg("j"));
  m.def("asymptotic_alpha", &eta::asymptotic_alpha, py::arg("x"));

  // ---- dicke ----
  py::class_<dicke::TwoSiteABC>(m, "TwoSiteABC")
      .def_readonly("a", &dicke::TwoSiteABC::a)
      .def_readonly("b", &dicke::TwoSiteABC::b)
      .def_readonly("c", &dicke::TwoSiteABC::c)
      .def_readonly("coherence_phase", &dicke::TwoSiteABC::coherence_phase);

  m.def(
      "dicke_state", [](int n, int k) { return dicke::dicke_state({n, k}); }, py::arg("n"),
      py::arg("k"));
  m.def(
      "two_site_abc", [](int n, int k) { return dicke::two_site_abc({n, k}); }, py::arg("n"),
      py::arg("k"));
  m.def(
      "assemble_two_site_rho",
      [](const dicke::TwoSiteABC& abc) -> Eigen::MatrixXcd {
        return dicke::assemble_two_site_rho(abc);
      },
      py::arg("abc"));
  m.def(
      "reduce_to_sites",
      [](const Eigen::VectorXcd& state, const std::vector<int>& sites) {
        return dicke::reduce_to_sites(state, sites);
      },
      py::arg("state"), py::arg("sites"));
  m.def(
      "is_two_site_entangled", [](int n, int k) { return dicke::is_two_site_entangled({n, k}); },
      py::arg("n"), py::arg("k"));
  m.def(
      "block_entropy", [](int n, int k, int m_) { return dicke::block_entropy({n, k}, m_); },
      py::arg("n"), py::arg("k"), py::arg("m"));
  m.def("binomial", &dicke::binomial, py::arg("n"), py::arg("k"));

  // ---- witness ----
  m.def(
      "partial_transpose",
      [](const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
        return witness::partial_transpose(witness::DensityMatrix(rho, dim_a, dim_b));
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"));
  m.def(
      "negativity",
      [](const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
        return witness::negativity(witness::DensityMatrix(rho, dim_a, dim_b));
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"));
  m.def(
      "is_ppt",
      [](const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
        return witness::is_ppt(witness::DensityMatrix(rho, dim_a, dim_b));
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"));
  m.def(
      "von_neumann_entropy",
      [](const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
        if (dim_b <= 0) dim_b = static_cast<int>(rho.rows()) / std::max(dim_a, 1);
        return witness::von_neumann_entropy(witness::DensityMatrix(rho, dim_a, dim_b));
      },
      py::arg("rho"), py::arg("dim_a") = 1, py::arg("dim_b") = 0);

  // ---- gauge ----
  m.def(
      "flux_quantum", [](const std::string& units) { return gauge::flux_quantum(constants_for(units)); },
      py::arg("units") = "si");
  m.def(
      "apply_pair_exchange_phase",
      [](const Eigen::MatrixXcd& rho, double phi) -> Eigen::MatrixXcd {
        if (rho.rows() != 4 || rho.cols() != 4) {
          throw std::domain_error("expected a 4x4 two-site density matrix");
        }
        return gauge::apply_pair_exchange_phase(Eigen::Matrix4cd(rho), {phi});
      },
      py::arg("rho"), py::arg("phi"));
  m.def(
      "symmetry_defect",
      [](int n, int k, double phi, const std::string& channel) {
        const auto ch = channel == "counter" ? gauge::CoherenceChannel::Diagonal
                                             : gauge::CoherenceChannel::OffDiagonal;
        const auto rep = gauge::symmetry_defect({n, k}, {phi}, ch);
        return py::make_tuple(rep.phase_constrained,
                              rep.defect ? py::cast(*rep.defect) : py::none());
      },
      py::arg("n"), py::arg("k"), py::arg("phi"), py::arg("channel") = "pair");
  m.def(
      "allowed_flux_set",
      [](const std::string& topology, int max_n, const std::string& units) {
        const auto topo = topology == "annulus" ? gauge::Topology::Annulus
                                                : gauge::Topology::SimplyConnected;
        const auto rep = gauge::allowed_flux_set(topo, max_n, constants_for(units));
        py::dict out;
        out["topology"] = topology;
        out["bulk_b_field"] = rep.bulk_b_field;
        out["flux_indices"] = rep.flux_indices;
        out["flux_values"] = rep.flux_values;
        out["symmetry_defect"] = rep.symmetry_defect;
        return out;
      },
      py::arg("topology"), py::arg("max_n") = 2, py::arg("units") = "si");

  // ---- field ----
  m.def(
      "coupling_matrix",
      [](int n_osc, double mass, double spacing) {
        return field::coupling_matrix({.n_osc = n_osc, .mass = mass, .spacing = spacing});
      },
      py::arg("n_osc"), py::arg("mass"), py::arg("spacing") = 1.0);
  m.def(
      "ground_covariance",
      [](const Eigen::MatrixXd& k_matrix) {
        const auto cov = field::ground_covariance(k_matrix);
        return py::make_tuple(cov.x, cov.p);
      },
      py::arg("k_matrix"));
  m.def(
      "gaussian_block_entropy",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& p, int begin, int end) {
        return field::gaussian_block_entropy({x, p}, field::BlockRange{begin, end});
      },
      py::arg("x"), py::arg("p"), py::arg("begin"), py::arg("end"));
  m.def(
      "symplectic_spectrum",
      [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& p) {
        return field::symplectic_spectrum({x, p});
      },
      py::arg("x"), py::arg("p"));
  m.def(
      "mass_scan_fit",
      [](int n_osc, double spacing, const std::vector<double>& masses) {
        const auto fit = field::mass_scan_fit(n_osc, spacing, masses);
        py::dict out;
        out["samples"] = fit.samples;
        out["slope"] = fit.slope;
        out["intercept"] = fit.intercept;
        out["r_squared"] = fit.r_squared;
        return out;
      },
      py::arg("n_osc"), py::arg("spacing"), py::arg("masses"));

  // ---- spin ----
  py::class_<spin::SpinCorrelatorReport>(m, "SpinCorrelatorReport")
      .def_readonly("i", &spin::SpinCorrelatorReport::i)
      .def_readonly("j", &spin::SpinCorrelatorReport::j)
      .def_readonly("czz", &spin::SpinCorrelatorReport::czz)
      .def_readonly("cxx", &spin::SpinCorrelatorReport::cxx)
      .def_readonly("cyy", &spin::SpinCorrelatorReport::cyy)
      .def_readonly("total", &spin::SpinCorrelatorReport::total);

  m.def("spin_correlator", &spin::spin_correlator, py::arg("state"), py::arg("i"), py::arg("j"));
  m.def("onsite_spin_squared", &spin::onsite_spin_squared, py::arg("state"), py::arg("i"));
  m.def(
      "hubbard_hamiltonian",
      [](int n, double t, double u, const std::string& geometry) {
        const auto geo = geometry == "ring" ? spin::Geometry::Ring : spin::Geometry::OpenChain;
        return spin::hubbard_hamiltonian({.n_sites = n, .t = t, .u = u, .geometry = geo});
      },
      py::arg("n_sites"), py::arg("t"), py::arg("u"), py::arg("geometry") = "chain");
  m.def(
      "half_filling_ground_state",
      [](int n, double t, double u, const std::string& geometry) {
        const auto geo = geometry == "ring" ? spin::Geometry::Ring : spin::Geometry::OpenChain;
        const auto gs = spin::half_filling_ground_state({.n_sites = n, .t = t, .u = u, .geometry = geo});
        return py::make_tuple(gs.energy, gs.state);
      },
      py::arg("n_sites"), py::arg("t"), py::arg("u"), py::arg("geometry") = "chain");
  m.def(
      "heisenberg_limit_check",
      [](double t, const std::vector<double>& u_list) {
        py::list out;
        for (const auto& point : spin::heisenberg_limit_check(t, u_list)) {
          out.append(py::make_tuple(point.u_over_t, point.spin_corr, point.pair_corr));
        }
        return out;
      },
      py::arg("t"), py::arg("u_list"));
  m.def(
      "eta_eigenstate_residual",
      [](int n, double t, double u, const std::string& geometry, int k, double q) {
        const auto geo = geometry == "ring" ? spin::Geometry::Ring : spin::Geometry::OpenChain;
        const auto rep =
            spin::eta_eigenstate_residual({.n_sites = n, .t = t, .u = u, .geometry = geo}, k, q);
        return py::make_tuple(rep.residual, rep.energy);
      },
      py::arg("n_sites"), py::arg("t"), py::arg("u"), py::arg("geometry"), py::arg("k"),
      py::arg("q"));
}
