#include "etapair/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "etapair/dicke.hpp"
#include "etapair/eta.hpp"
#include "etapair/field.hpp"
#include "etapair/fock.hpp"
#include "etapair/gauge.hpp"
#include "etapair/parallel.hpp"
#include "etapair/report.hpp"
#include "etapair/spin.hpp"
#include "etapair/witness.hpp"

namespace etapair::cli {

namespace {

using report::ReportRecord;
using report::Value;

constexpr double pi = std::numbers::pi;

double two_site_negativity(const dicke::DickeSpec& spec) {
  const auto rho = dicke::assemble_two_site_rho(dicke::two_site_abc(spec));
  return witness::negativity(witness::DensityMatrix(rho, 2, 2));
}

std::vector<ReportRecord> run_dicke_rho(int n, int k) {
  const auto abc = dicke::two_site_abc({.n = n, .k = k});
  ReportRecord rec;
  rec.experiment = "dicke_rho";
  rec.params = {{"n", n}, {"k", k}};
  rec.results = {{"a", abc.a}, {"b", abc.b}, {"c", abc.c}};
  return {rec};
}

std::vector<ReportRecord> run_entangled_scan(int n_max, unsigned threads) {
  if (n_max < 2) throw std::domain_error("scan needs --n-max >= 2");
  std::vector<dicke::DickeSpec> grid;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) grid.push_back({.n = n, .k = k});
  }
  struct Row {
    bool entangled = false;
    double negativity = 0.0;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    rows[i] = {dicke::is_two_site_entangled(grid[i]), two_site_negativity(grid[i])};
  });
  std::vector<ReportRecord> records;
  records.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ReportRecord rec;
    rec.experiment = "entangled_scan";
    rec.params = {{"n", grid[i].n}, {"k", grid[i].k}};
    rec.results = {{"entangled", rows[i].entangled}, {"negativity", rows[i].negativity}};
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ReportRecord> run_block_entropy(int n, int k, int m) {
  std::vector<int> sizes;
  if (m > 0) {
    sizes.push_back(m);
  } else {
    for (int b = 1; b <= n - 1; ++b) sizes.push_back(b);
  }
  std::vector<ReportRecord> records;
  records.reserve(sizes.size());
  for (int b : sizes) {
    ReportRecord rec;
    rec.experiment = "block_entropy";
    rec.params = {{"n", n}, {"k", k}, {"m", b}};
    rec.results = {{"entropy_nats", dicke::block_entropy({.n = n, .k = k}, b)}};
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ReportRecord> run_odlro(int n, int k, int i, int j, double q_over_pi) {
  if (n > 6) throw std::length_error("brute-force pair correlator limited to 6 sites");
  if (j < 0) j = n - 1;
  const auto state =
      eta::build_eta_state({.n_sites = n, .k_pairs = k, .momentum_phase = q_over_pi * pi});
  const auto rep = eta::odlro_correlator(state, i, j);
  ReportRecord rec;
  rec.experiment = "odlro";
  rec.params = {{"n", n}, {"k", k}, {"i", i}, {"j", j}, {"q_over_pi", q_over_pi}};
  rec.results = {{"correlator_re", rep.correlator.real()},
                 {"correlator_im", rep.correlator.imag()},
                 {"closed_form", rep.closed_form},
                 {"alpha_limit", rep.alpha_limit}};
  return {rec};
}

std::vector<ReportRecord> run_gauge_swap(int n, int k, int steps, double phi_max_over_pi,
                                         const std::string& channel_name, unsigned threads) {
  if (steps < 1) throw std::domain_error("sweep needs --steps >= 1");
  const auto channel = channel_name == "counter" ? gauge::CoherenceChannel::Diagonal
                                                 : gauge::CoherenceChannel::OffDiagonal;
  const double phi_max = phi_max_over_pi * pi;
  std::vector<gauge::DefectReport> rows(static_cast<std::size_t>(steps) + 1);
  parallel_for(rows.size(), threads, [&](std::size_t s) {
    const double phi = phi_max * static_cast<double>(s) / steps;
    rows[s] = gauge::symmetry_defect({.n = n, .k = k}, {.phi = phi}, channel);
  });
  std::vector<ReportRecord> records;
  records.reserve(rows.size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    ReportRecord rec;
    rec.experiment = "gauge_swap";
    rec.params = {{"n", n},
                  {"k", k},
                  {"channel", channel_name},
                  {"phi", phi_max * static_cast<double>(s) / steps}};
    rec.results = {{"status", rows[s].phase_constrained
                                  ? Value("constrained")
                                  : Value("no odlro: phase unconstrained")},
                   {"defect", rows[s].defect ? Value(*rows[s].defect) : Value()}};
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ReportRecord> run_flux_set(const std::string& topology_name,
                                       const std::string& units_name, int max_n) {
  const auto topology = topology_name == "annulus" ? gauge::Topology::Annulus
                                                   : gauge::Topology::SimplyConnected;
  const auto constants = units_name == "natural" ? gauge::PhysicalConstants::natural()
                                                 : gauge::PhysicalConstants::si();
  const auto report = gauge::allowed_flux_set(topology, max_n, constants);
  std::vector<ReportRecord> records;
  records.reserve(report.flux_indices.size());
  for (std::size_t i = 0; i < report.flux_indices.size(); ++i) {
    ReportRecord rec;
    rec.experiment = "flux_set";
    rec.params = {{"topology", topology_name}, {"units", units_name}, {"max_n", max_n}};
    rec.results = {{"n_index", report.flux_indices[i]},
                   {"flux", report.flux_values[i]},
                   {"bulk_b_field", report.bulk_b_field},
                   {"defect_at_flux", report.symmetry_defect}};
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ReportRecord> run_field_scan(int sites, double mass_min, double mass_max, int points,
                                         double spacing, unsigned threads) {
  if (points < 4) throw std::domain_error("scan needs --points >= 4");
  if (!(mass_min > 0.0) || !(mass_max > 0.0)) {
    throw std::domain_error("masses must be positive");
  }
  std::vector<double> masses;
  masses.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double f = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
    masses.push_back(mass_min * std::pow(mass_max / mass_min, f));
  }
  const auto fit = field::mass_scan_fit(sites, spacing, masses, threads);

  std::vector<ReportRecord> records;
  records.reserve(fit.samples.size() + 1);
  for (const auto& [mass, entropy] : fit.samples) {
    ReportRecord rec;
    rec.experiment = "field_scan";
    rec.params = {{"sites", sites}, {"spacing", spacing}, {"kind", "sample"}};
    rec.results = {{"mass", mass},
                   {"entropy_nats", entropy},
                   {"slope", Value()},
                   {"intercept", Value()},
                   {"r_squared", Value()}};
    records.push_back(std::move(rec));
  }
  ReportRecord fit_rec;
  fit_rec.experiment = "field_scan";
  fit_rec.params = {{"sites", sites}, {"spacing", spacing}, {"kind", "fit"}};
  fit_rec.results = {{"mass", Value()},
                     {"entropy_nats", Value()},
                     {"slope", fit.slope},
                     {"intercept", fit.intercept},
                     {"r_squared", fit.r_squared}};
  records.push_back(std::move(fit_rec));
  return records;
}

std::vector<ReportRecord> run_spin_correlators(int n, int k, int i, int j, double q_over_pi) {
  const auto state =
      eta::build_eta_state({.n_sites = n, .k_pairs = k, .momentum_phase = q_over_pi * pi});
  const auto rep = spin::spin_correlator(state, i, j);
  ReportRecord rec;
  rec.experiment = "spin_correlators";
  rec.params = {{"n", n}, {"k", k}, {"i", i}, {"j", j}, {"q_over_pi", q_over_pi}};
  rec.results = {{"czz", rep.czz}, {"cxx", rep.cxx}, {"cyy", rep.cyy}, {"total", rep.total}};
  return {rec};
}

spin::Geometry parse_geometry(const std::string& name) {
  return name == "ring" ? spin::Geometry::Ring : spin::Geometry::OpenChain;
}

std::vector<ReportRecord> run_hubbard(int n, double t, double u, const std::string& geometry) {
  const spin::HubbardSpec spec{.n_sites = n, .t = t, .u = u, .geometry = parse_geometry(geometry)};
  const auto gs = spin::half_filling_ground_state(spec);
  const auto spin_rep = spin::spin_correlator(gs.state, 0, 1);
  const auto pair_rep = eta::odlro_correlator(gs.state, 0, 1);
  ReportRecord rec;
  rec.experiment = "hubbard";
  rec.params = {{"n", n}, {"t", t}, {"u", u}, {"geometry", geometry}};
  rec.results = {{"ground_energy", gs.energy},
                 {"spin_corr_01", spin_rep.total},
                 {"pair_corr_01", pair_rep.correlator.real()}};
  return {rec};
}

std::vector<ReportRecord> run_eta_residual(int n, int k, double q_over_pi, double t, double u,
                                           const std::string& geometry) {
  const spin::HubbardSpec spec{.n_sites = n, .t = t, .u = u, .geometry = parse_geometry(geometry)};
  const auto rep = spin::eta_eigenstate_residual(spec, k, q_over_pi * pi);
  ReportRecord rec;
  rec.experiment = "eta_residual";
  rec.params = {{"n", n},       {"k", k}, {"q_over_pi", q_over_pi},
                {"t", t},       {"u", u}, {"geometry", geometry}};
  rec.results = {{"energy", rep.energy}, {"residual", rep.residual}};
  return {rec};
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eta-pairing states: pair correlations, entanglement witnesses, "
               "exchange-phase constraints, and massive-field entropy scans"};
  app.require_subcommand(1);

  std::string format = "csv";
  unsigned threads = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "worker threads for parameter scans (0 = all cores)");

  struct {
    int n = 0, k = 0;
  } dicke_opts;
  auto* cmd_dicke = app.add_subcommand("dicke-rho", "closed-form two-site reduction (a, b, c)");
  cmd_dicke->add_option("--n", dicke_opts.n, "number of sites")->required();
  cmd_dicke->add_option("--k", dicke_opts.k, "number of pairs")->required();

  int scan_n_max = 0;
  auto* cmd_scan = app.add_subcommand("entangled-scan", "PPT verdict and negativity over (n, k)");
  cmd_scan->add_option("--n-max", scan_n_max, "largest n in the scan")->required();

  struct {
    int n = 0, k = 0, m = 0;
  } block_opts;
  auto* cmd_block = app.add_subcommand("block-entropy", "entropy of an m-site block of |n,k>");
  cmd_block->add_option("--n", block_opts.n)->required();
  cmd_block->add_option("--k", block_opts.k)->required();
  cmd_block->add_option("--m", block_opts.m, "block size (default: all 1..n-1)");

  struct {
    int n = 0, k = 0, i = 0, j = -1;
    double q_over_pi = 0.0;
  } odlro_opts;
  auto* cmd_odlro = app.add_subcommand("odlro", "brute-force pair-hopping correlator (n <= 6)");
  cmd_odlro->add_option("--n", odlro_opts.n)->required();
  cmd_odlro->add_option("--k", odlro_opts.k)->required();
  cmd_odlro->add_option("--i", odlro_opts.i, "first site (default 0)");
  cmd_odlro->add_option("--j", odlro_opts.j, "second site (default n-1)");
  cmd_odlro->add_option("--q-over-pi", odlro_opts.q_over_pi, "pair phase per site, units of pi");

  struct {
    int n = 0, k = 0, steps = 100;
    double phi_max_over_pi = 2.0;
    std::string channel = "pair";
  } swap_opts;
  auto* cmd_swap = app.add_subcommand("gauge-swap", "symmetry defect along an exchange-phase sweep");
  cmd_swap->add_option("--n", swap_opts.n)->required();
  cmd_swap->add_option("--k", swap_opts.k)->required();
  cmd_swap->add_option("--steps", swap_opts.steps, "sweep resolution");
  cmd_swap->add_option("--phi-max-over-pi", swap_opts.phi_max_over_pi, "sweep end, units of pi");
  cmd_swap->add_option("--channel", swap_opts.channel, "coherence channel")
      ->check(CLI::IsMember({"pair", "counter"}));

  struct {
    std::string topology;
    std::string units = "si";
    int max_n = 2;
  } flux_opts;
  auto* cmd_flux = app.add_subcommand("flux-set", "allowed magnetic fluxes for a topology");
  cmd_flux->add_option("--topology", flux_opts.topology)
      ->check(CLI::IsMember({"simply-connected", "annulus"}))
      ->required();
  cmd_flux->add_option("--units", flux_opts.units)->check(CLI::IsMember({"si", "natural"}));
  cmd_flux->add_option("--max-n", flux_opts.max_n, "largest |flux index| reported");

  struct {
    int sites = 0, points = 0;
    double mass_min = 0.0, mass_max = 0.0, spacing = 1.0;
  } field_opts;
  auto* cmd_field = app.add_subcommand("field-scan", "half-chain entropy against mass, with fit");
  cmd_field->add_option("--sites", field_opts.sites)->required();
  cmd_field->add_option("--mass-min", field_opts.mass_min)->required();
  cmd_field->add_option("--mass-max", field_opts.mass_max)->required();
  cmd_field->add_option("--points", field_opts.points, "number of masses (log-spaced)")->required();
  cmd_field->add_option("--spacing", field_opts.spacing, "lattice spacing / UV cutoff");

  struct {
    int n = 0, k = 0, i = 0, j = 1;
    double q_over_pi = 0.0;
  } spin_opts;
  auto* cmd_spin = app.add_subcommand("spin-correlators", "spin-spin correlators in a pair state");
  cmd_spin->add_option("--n", spin_opts.n)->required();
  cmd_spin->add_option("--k", spin_opts.k)->required();
  cmd_spin->add_option("--i", spin_opts.i);
  cmd_spin->add_option("--j", spin_opts.j);
  cmd_spin->add_option("--q-over-pi", spin_opts.q_over_pi);

  struct {
    int n = 2;
    double t = 1.0, u = 0.0;
    std::string geometry = "chain";
  } hubbard_opts;
  auto* cmd_hubbard = app.add_subcommand("hubbard", "half-filled ground-state diagnostics");
  cmd_hubbard->add_option("--n", hubbard_opts.n, "sites (max 6)");
  cmd_hubbard->add_option("--t", hubbard_opts.t, "hopping")->required();
  cmd_hubbard->add_option("--u", hubbard_opts.u, "on-site interaction")->required();
  cmd_hubbard->add_option("--geometry", hubbard_opts.geometry)
      ->check(CLI::IsMember({"chain", "ring"}));

  struct {
    int n = 0, k = 0;
    double q_over_pi = 1.0, t = 1.0, u = 0.0;
    std::string geometry = "ring";
  } residual_opts;
  auto* cmd_residual = app.add_subcommand("eta-residual", "eigenstate residual of a pair condensate");
  cmd_residual->add_option("--n", residual_opts.n)->required();
  cmd_residual->add_option("--k", residual_opts.k)->required();
  cmd_residual->add_option("--q-over-pi", residual_opts.q_over_pi);
  cmd_residual->add_option("--t", residual_opts.t);
  cmd_residual->add_option("--u", residual_opts.u);
  cmd_residual->add_option("--geometry", residual_opts.geometry)
      ->check(CLI::IsMember({"chain", "ring"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<ReportRecord> records;
    if (cmd_dicke->parsed()) {
      records = run_dicke_rho(dicke_opts.n, dicke_opts.k);
    } else if (cmd_scan->parsed()) {
      records = run_entangled_scan(scan_n_max, threads);
    } else if (cmd_block->parsed()) {
      records = run_block_entropy(block_opts.n, block_opts.k, block_opts.m);
    } else if (cmd_odlro->parsed()) {
      records = run_odlro(odlro_opts.n, odlro_opts.k, odlro_opts.i, odlro_opts.j,
                          odlro_opts.q_over_pi);
    } else if (cmd_swap->parsed()) {
      records = run_gauge_swap(swap_opts.n, swap_opts.k, swap_opts.steps,
                               swap_opts.phi_max_over_pi, swap_opts.channel, threads);
    } else if (cmd_flux->parsed()) {
      records = run_flux_set(flux_opts.topology, flux_opts.units, flux_opts.max_n);
    } else if (cmd_field->parsed()) {
      records = run_field_scan(field_opts.sites, field_opts.mass_min, field_opts.mass_max,
                               field_opts.points, field_opts.spacing, threads);
    } else if (cmd_spin->parsed()) {
      records = run_spin_correlators(spin_opts.n, spin_opts.k, spin_opts.i, spin_opts.j,
                                     spin_opts.q_over_pi);
    } else if (cmd_hubbard->parsed()) {
      records = run_hubbard(hubbard_opts.n, hubbard_opts.t, hubbard_opts.u,
                            hubbard_opts.geometry);
    } else if (cmd_residual->parsed()) {
      records = run_eta_residual(residual_opts.n, residual_opts.k, residual_opts.q_over_pi,
                                 residual_opts.t, residual_opts.u, residual_opts.geometry);
    }
    out << report::emit(records, format == "json" ? report::Format::Json : report::Format::Csv);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace etapair::cli
