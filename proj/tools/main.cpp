#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octaharm/exports.hpp"
#include "octaharm/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace octaharm;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::vector<ManifoldId> parse_manifolds(const std::vector<std::string>& names) {
  if (names.empty()) {
    return {kAllManifolds.begin(), kAllManifolds.end()};
  }
  std::vector<ManifoldId> out;
  for (const std::string& n : names) {
    const auto m = manifold_from_string(n);
    if (!m) throw CLI::ValidationError("--manifold", "unknown manifold " + n);
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  return out;
}

fs::path resolve_outdir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("OCTAHARM_OUTDIR"); env && *env) return env;
  return ".";
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path.string());
  out << content;
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

int parse_two_j(double j) {
  const double two_j = 2.0 * j;
  const double rounded = std::round(two_j);
  if (std::abs(two_j - rounded) > 1e-9 || rounded < 0) {
    throw CLI::ValidationError("--j", "spin must be a non-negative multiple of 1/2");
  }
  return static_cast<int>(rounded);
}

int cmd_verify(const std::vector<std::string>& manifold_names,
               const std::string& report_path, const std::string& outdir,
               std::uint64_t seed, double tol_table, double tol_basis,
               const std::string& fault) {
  VerifyOptions opts;
  opts.manifolds = parse_manifolds(manifold_names);
  opts.seed = seed;
  opts.table_tol = tol_table;
  opts.basis_tol = tol_basis;
  if (fault == "table6.1") {
    opts.fault = FaultInjection::Table61Alpha1;
  } else if (!fault.empty()) {
    throw CLI::ValidationError("--inject-fault", "unknown fault " + fault);
  }

  const VerifyReport report = run_verification(opts);
  const std::string text = report.text();
  std::cout << text;
  if (!report_path.empty()) {
    write_file(resolve_outdir(outdir) / report_path, text);
  }
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_spectrum(const std::vector<std::string>& manifold_names, double jmax,
                 const std::string& out, const std::string& outdir) {
  if (jmax < 0 || jmax > 16) {
    throw CLI::ValidationError("--jmax", "jmax must lie in [0, 16]");
  }
  const auto manifolds = parse_manifolds(manifold_names);
  std::vector<DeckGroup> groups;
  groups.reserve(manifolds.size());
  for (ManifoldId m : manifolds) groups.push_back(build_deck_group(m));
  std::vector<std::reference_wrapper<const DeckGroup>> refs(groups.begin(),
                                                            groups.end());
  const std::string csv = spectrum_csv(refs, static_cast<int>(2 * jmax));
  write_file(resolve_outdir(outdir) / out, csv);
  return kExitPass;
}

int cmd_basis(const std::vector<std::string>& manifold_names,
              const std::vector<double>& spins, const std::string& frame,
              const std::string& outdir) {
  const auto manifolds = parse_manifolds(manifold_names);
  const fs::path dir = resolve_outdir(outdir);
  bool any_failure = false;

  for (ManifoldId m : manifolds) {
    const DeckGroup deck = build_deck_group(m);
    for (double jval : spins) {
      const int two_j = parse_two_j(jval);
      const std::string stem = std::string("basis_") + to_string(m) + "_twoJ" +
                               std::to_string(two_j);
      try {
        const Spin j(two_j);
        std::optional<bool> verdict;
        InvariantBasis numeric = invariant_basis(j, deck);
        std::string note;
        if (two_j % 2 == 1) {
          note = "half-integer spin carries no invariant functions: the group "
                 "contains the point inversion, which negates odd-degree "
                 "polynomials";
        }

        InvariantBasis closed;
        const bool have_closed = m == ManifoldId::N4 && two_j % 2 == 0;
        if (have_closed) {
          closed = n4_closed_form_basis(j);
          verdict = compare_spans(numeric, to_original_frame(closed));
          if (!*verdict) any_failure = true;
        }

        if (frame == "rotated") {
          if (!have_closed) {
            std::cerr << "basis: rotated frame is only defined for N4 at integer spin\n";
            return kExitUsage;
          }
          write_file(dir / (stem + "_rotated.json"), basis_json(closed, verdict));
        } else {
          write_file(dir / (stem + ".json"), basis_json(numeric, verdict, note));
          if (have_closed) {
            write_file(dir / (stem + "_closed_form.json"),
                       basis_json(closed, verdict));
          }
        }
        if (verdict.has_value()) {
          std::cout << to_string(m) << " two_j=" << two_j
                    << " closed-form span matches: " << (*verdict ? "yes" : "no")
                    << '\n';
        }
      } catch (const RankAmbiguityError& e) {
        std::cerr << "basis " << to_string(m) << " two_j=" << two_j
                  << ": " << e.what() << '\n';
        any_failure = true;
      }
    }
  }
  return any_failure ? kExitCheckFailure : kExitPass;
}

int cmd_centers(const std::vector<std::string>& manifold_names,
                const std::string& out, const std::string& outdir) {
  const auto manifolds = parse_manifolds(manifold_names);
  std::vector<DeckGroup> groups;
  groups.reserve(manifolds.size());
  for (ManifoldId m : manifolds) groups.push_back(build_deck_group(m));
  std::vector<std::reference_wrapper<const DeckGroup>> refs(groups.begin(),
                                                            groups.end());
  write_file(resolve_outdir(outdir) / out, centers_csv(refs));
  return kExitPass;
}

int cmd_decks(const std::vector<std::string>& manifold_names,
              const std::string& outdir) {
  const fs::path dir = resolve_outdir(outdir);
  for (ManifoldId m : parse_manifolds(manifold_names)) {
    const DeckGroup deck = build_deck_group(m);
    write_file(dir / (std::string("deck_") + to_string(m) + ".json"),
               deck_group_json(deck));
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Deck groups of the octahedral spherical 3-manifolds N4, N5, N6 and "
      "their invariant harmonic bases"};
  app.require_subcommand(1);

  std::vector<std::string> manifold_names;
  std::string outdir;
  std::uint64_t seed = 0;
  app.set_config("--config");
  app.add_option("--outdir", outdir,
                 "output directory (overrides OCTAHARM_OUTDIR; default .)");
  app.add_option("--seed", seed, "seed for random-point checks (default 0)");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  std::string report_path;
  double tol_table = kTableTol;
  double tol_basis = kBasisTol;
  std::string fault;
  verify->add_option("--manifold", manifold_names, "restrict to manifolds");
  verify->add_option("--report", report_path, "write the report to this file");
  verify->add_option("--tol-table", tol_table, "table reproduction tolerance");
  verify->add_option("--tol-basis", tol_basis, "basis invariance tolerance");
  verify->add_option("--inject-fault", fault, "test fixture: corrupt stored data")
      ->group("");  // hidden

  auto* spectrum = app.add_subcommand("spectrum", "export multiplicities as CSV");
  double jmax = 6.0;
  std::string spectrum_out = "spectrum.csv";
  spectrum->add_option("--manifold", manifold_names, "restrict to manifolds");
  spectrum->add_option("--jmax", jmax, "largest spin j (<= 16)");
  spectrum->add_option("--out", spectrum_out, "output CSV path");

  auto* basis = app.add_subcommand("basis", "export invariant bases as JSON");
  std::vector<double> basis_spins;
  std::string frame = "original";
  basis->add_option("--manifold", manifold_names, "manifold(s)")->required();
  basis->add_option("--j", basis_spins, "spin j (multiple allowed)")->required();
  basis->add_option("--frame", frame, "original|rotated")
      ->check(CLI::IsMember({"original", "rotated"}));

  auto* centers = app.add_subcommand("centers", "export tile centers as CSV");
  std::string centers_out = "centers.csv";
  centers->add_option("--manifold", manifold_names, "restrict to manifolds");
  centers->add_option("--out", centers_out, "output CSV path");

  auto* decks = app.add_subcommand("decks", "export deck groups as JSON");
  decks->add_option("--manifold", manifold_names, "restrict to manifolds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(manifold_names, report_path, outdir, seed, tol_table,
                        tol_basis, fault);
    }
    if (spectrum->parsed()) {
      return cmd_spectrum(manifold_names, jmax, spectrum_out, outdir);
    }
    if (basis->parsed()) {
      return cmd_basis(manifold_names, basis_spins, frame, outdir);
    }
    if (centers->parsed()) {
      return cmd_centers(manifold_names, centers_out, outdir);
    }
    if (decks->parsed()) {
      return cmd_decks(manifold_names, outdir);
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "check failure: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}
