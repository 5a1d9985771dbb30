// hierq: hierarchical information of locally measured multi-qubit states.
//
//   hierq sweep     --family w --csv w.csv
//   hierq spectrum  --family ghz --alpha 0.5
//   hierq spectrum  --distribution p.txt
//   hierq validate  --family w --alpha 0.3 --rotation 1.5707963,0,3.1415927
//   hierq selftest
//
// Exit codes: 0 success, 1 invalid arguments, 2 convergence failure, 3 I/O.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hierq/errors.hpp"
#include "hierq/hierarchy.hpp"
#include "hierq/measurement.hpp"
#include "hierq/quantum_state.hpp"
#include "hierq/sweep.hpp"
#include "hierq/sweep_io.hpp"
#include "hierq/text_formats.hpp"
#include "selfcheck.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInvalidArguments = 1, kConvergence = 2, kIo = 3 };

struct FamilyOptions {
  std::string family = "w";
  std::size_t qubits = 3;
  std::string state_file;
  std::vector<std::string> rotations;
};

struct IpfFlags {
  double tolerance = 1e-12;
  std::size_t max_cycles = 10000;

  hierq::IpfOptions options() const { return {tolerance, max_cycles}; }
};

void add_family_flags(CLI::App& cmd, FamilyOptions& f) {
  cmd.add_option("--family", f.family, "State family: ghz, w or custom")
      ->check(CLI::IsMember({"ghz", "w", "custom"}, CLI::ignore_case));
  cmd.add_option("--qubits", f.qubits, "Qubit count for ghz/w")->check(CLI::Range(2, 12));
  cmd.add_option("--state", f.state_file, "Pure-state file for --family custom");
  cmd.add_option("--rotation", f.rotations,
                 "Measurement unitary angles 'theta,phi,lambda'; give once for every site or "
                 "once per site (default: computational basis)");
}

void add_ipf_flags(CLI::App& cmd, IpfFlags& ipf) {
  cmd.add_option("--tol", ipf.tolerance, "Max L1 marginal mismatch for the projections")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-iter", ipf.max_cycles, "Max IPF cycles per projection");
}

hierq::SiteMatrix parse_rotation(const std::string& text) {
  std::vector<double> angles;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      angles.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw hierq::InvalidArgument("bad rotation angle '" + token + "'");
    }
  }
  if (angles.size() != 3) throw hierq::InvalidArgument("rotation needs theta,phi,lambda");
  return hierq::unitary_from_angles(angles[0], angles[1], angles[2]);
}

hierq::FamilySpec make_spec(const FamilyOptions& f) {
  hierq::FamilySpec spec;
  if (f.family == "ghz") {
    spec.family = hierq::Family::Ghz;
  } else if (f.family == "w") {
    spec.family = hierq::Family::W;
  } else {
    spec.family = hierq::Family::Custom;
    if (f.state_file.empty()) throw hierq::InvalidArgument("--family custom needs --state");
    spec.custom_state = hierq::read_state(f.state_file);
  }
  spec.qubits = spec.custom_state ? spec.custom_state->qubits() : f.qubits;
  for (const auto& r : f.rotations) spec.measurement.site_unitaries.push_back(parse_rotation(r));
  spec.validate();
  return spec;
}

void print_spectrum(const hierq::JointDistribution& p, const hierq::HierarchySpectrum& s) {
  std::printf("variables        %zu\n", s.variables);
  for (std::size_t k = 1; k <= s.variables; ++k) {
    const auto& level = s.levels[k - 1];
    std::printf("I%-2zu              %.12g bits  (cycles %zu, mismatch %.3g%s)\n", k, s.level(k),
                level.iterations, level.residual, level.infinite ? ", infinite" : "");
  }
  const double h = hierq::shannon_entropy(p);
  std::printf("entropy          %.12g bits\n", h);
  std::printf("multi-info       %.12g bits\n", hierq::multi_information(p));
  std::printf("sum residual     %.3g\n", std::abs(s.total() - (hierq::max_entropy_bits(p) - h)));
}

void print_report(const char* title, const hierq::ValidationReport& report) {
  std::printf("%s: %s\n", title, report.passed() ? "ok" : "FAILED");
  for (const auto& c : report.checks) {
    std::printf("  %-12s %-4s residual %.3g (tol %.0e)\n", c.name.c_str(), c.passed ? "ok" : "FAIL",
                c.residual, c.tolerance);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical information of locally measured multi-qubit states"};
  app.require_subcommand(1);

  // sweep
  FamilyOptions sweep_family;
  IpfFlags sweep_ipf;
  double start = 0.0, stop = 1.0;
  std::size_t points = 101, workers = 1;
  std::string csv_path;
  bool no_plot = false;
  auto* sweep = app.add_subcommand("sweep", "Spectrum over a grid of mixing weights alpha");
  add_family_flags(*sweep, sweep_family);
  add_ipf_flags(*sweep, sweep_ipf);
  sweep->add_option("--start", start, "First alpha")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--stop", stop, "Last alpha")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--points", points, "Grid points")->check(CLI::Range(1, 1000000));
  sweep->add_option("--workers", workers, "Threads for independent grid points")
      ->check(CLI::Range(1, 256));
  sweep->add_option("--csv", csv_path, "Output CSV (default: stdout)");
  sweep->add_flag("--no-plot", no_plot, "Skip the plot script next to the CSV");

  // spectrum
  FamilyOptions spectrum_family;
  IpfFlags spectrum_ipf;
  std::optional<double> alpha;
  std::string distribution_file;
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of one state or distribution");
  add_family_flags(*spectrum, spectrum_family);
  add_ipf_flags(*spectrum, spectrum_ipf);
  auto* alpha_opt = spectrum->add_option("--alpha", alpha, "Mixing weight")->check(CLI::Range(0.0, 1.0));
  auto* dist_opt = spectrum->add_option("--distribution", distribution_file, "Distribution file");
  alpha_opt->excludes(dist_opt);

  // validate
  FamilyOptions validate_family;
  double validate_alpha = 1.0;
  auto* validate = app.add_subcommand("validate", "Check the density operator and measurement");
  add_family_flags(*validate, validate_family);
  validate->add_option("--alpha", validate_alpha, "Mixing weight")->check(CLI::Range(0.0, 1.0));

  // selftest
  std::uint64_t seed = 20240601;
  auto* selftest = app.add_subcommand("selftest", "Oracle equivalence and invariant audits");
  selftest->add_option("--seed", seed, "Seed for the random distributions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidArguments;
  }

  try {
    if (*sweep) {
      if (stop < start) throw hierq::InvalidArgument("--stop must not be below --start");
      const auto spec = make_spec(sweep_family);
      const auto grid = hierq::uniform_grid(start, stop, points);
      const auto table = hierq::run_sweep(spec, grid, {sweep_ipf.options(), workers});
      if (csv_path.empty()) {
        hierq::emit_csv(table, std::cout);
      } else {
        hierq::emit_csv(table, std::filesystem::path(csv_path));
        if (!no_plot) hierq::emit_plot_script(table, std::filesystem::path(csv_path));
      }
      return kOk;
    }
    if (*spectrum) {
      if (!distribution_file.empty()) {
        const auto p = hierq::read_distribution(std::filesystem::path(distribution_file));
        print_spectrum(p, hierq::hierarchy_spectrum(p, spectrum_ipf.options()));
        return kOk;
      }
      if (!alpha) throw hierq::InvalidArgument("spectrum needs --alpha or --distribution");
      const auto spec = make_spec(spectrum_family);
      const auto p = hierq::family_distribution(spec, *alpha);
      const auto s = hierq::hierarchy_spectrum(p, spectrum_ipf.options());
      std::printf("family           %s\nalpha            %.12g\n", spec.label().c_str(), *alpha);
      print_spectrum(p, s);
      return kOk;
    }
    if (*validate) {
      const auto spec = make_spec(validate_family);
      const auto rho = hierq::family_density(spec, validate_alpha);
      const auto state_report = hierq::validate_density(rho);
      print_report("density operator", state_report);
      bool ok = state_report.passed();
      const auto bases = spec.measurement.bases(rho.qubits());
      for (std::size_t q = 0; q < bases.size(); ++q) {
        const auto report = hierq::validate_projector_set(bases[q]);
        const std::string title = "site " + std::to_string(q) + " projectors";
        print_report(title.c_str(), report);
        ok = ok && report.passed();
      }
      return ok ? kOk : kInvalidArguments;
    }
    if (*selftest) {
      bool ok = true;
      for (const auto& a : hierq::selfcheck::run_selftest(seed)) {
        std::printf("[%s] %-26s worst %.3g (tol %.0e)\n", a.passed ? "PASS" : "FAIL",
                    a.name.c_str(), a.worst, a.tolerance);
        ok = ok && a.passed;
      }
      return ok ? kOk : kConvergence;
    }
  } catch (const hierq::ConvergenceFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConvergence;
  } catch (const hierq::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const hierq::InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidArguments;
  } catch (const hierq::NumericalFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidArguments;
  }
  return kInvalidArguments;
}
