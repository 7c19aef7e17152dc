#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cohdisc/coherence.hpp"
#include "cohdisc/discrimination.hpp"
#include "cohdisc/ensembles.hpp"
#include "cohdisc/io.hpp"
#include "cohdisc/recovery.hpp"
#include "cohdisc/reproduce.hpp"
#include "cohdisc/types.hpp"

namespace {

using cohdisc::io::json;

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw cohdisc::ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::uint64_t seed = 0xC0FFEE;
  int restarts = 20;
  double tol_opt = 1e-12;

  cohdisc::SearchConfig search() const {
    cohdisc::SearchConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.tol_opt = tol_opt;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& input_help) {
  cmd->add_option("input", o.input, input_help)->required();
  cmd->add_option("-o,--output", o.output, "write the JSON result here instead of stdout");
  cmd->add_option("--seed", o.seed, "seed for the randomized search");
  cmd->add_option("--restarts", o.restarts, "random restarts on top of the warm start")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", o.tol_opt, "ascent stopping gain")->check(CLI::PositiveNumber);
}

int cmd_coherence(const CommonOpts& o, bool force_numerical) {
  const cohdisc::Matrix m = cohdisc::io::load_matrix(o.input);
  cohdisc::CoherenceConfig cfg;
  cfg.search = o.search();
  cfg.force_numerical = force_numerical;
  const cohdisc::CoherenceReport rep =
      cohdisc::geometric_coherence(cohdisc::DensityMatrix(m), cfg);
  emit(cohdisc::io::coherence_to_json(rep), o.output);
  return 0;
}

int cmd_discriminate(const CommonOpts& o, const std::string& method) {
  const cohdisc::PureEnsemble e = cohdisc::io::load_ensemble(o.input);
  cohdisc::io::json out;
  if (method == "helstrom") {
    out = cohdisc::io::discrimination_to_json(cohdisc::helstrom_two(e));
  } else if (method == "gso") {
    const cohdisc::GsoMeasurement g = cohdisc::gso_measurement(e);
    const double err = cohdisc::gso_error(e);
    const cohdisc::DiscriminationResult res{1.0 - err, err, g.measurement,
                                            "gso", 0, 0, true};
    out = cohdisc::io::discrimination_to_json(res);
  } else {
    out = cohdisc::io::discrimination_to_json(
        cohdisc::optimal_vn_search(e, o.search()));
  }
  emit(out, o.output);
  return 0;
}

int cmd_qsd_state(const CommonOpts& o, int copies) {
  const cohdisc::PureEnsemble e = cohdisc::io::load_ensemble(o.input);
  const cohdisc::QSDState q = cohdisc::multicopy_qsd_state(e, copies);
  emit(cohdisc::io::matrix_to_json(q.matrix.matrix()), o.output);
  return 0;
}

int cmd_recover(const CommonOpts& o) {
  const cohdisc::PureEnsemble e = cohdisc::io::load_ensemble(o.input);
  const cohdisc::RecoveryResult r =
      cohdisc::recover_optimal_measurement(e, o.search());
  const cohdisc::RecoveryVerification v = cohdisc::verify_recovery(e, r);
  emit(cohdisc::io::recovery_to_json(r, v), o.output);
  return 0;
}

int cmd_reproduce(const CommonOpts& o, bool quick) {
  const auto progress = [](const cohdisc::CriterionResult& r) {
    std::cerr << "check " << r.id << " [" << (r.passed ? "PASS" : "FAIL")
              << "] " << r.name << "; " << r.detail << "\n";
  };
  const cohdisc::ReproductionReport rep =
      cohdisc::run_reproduction(o.seed, quick, progress);
  json checks = json::array();
  for (const auto& c : rep.criteria)
    checks.push_back(json{{"id", c.id},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"detail", c.detail},
                          {"seconds", c.seconds}});
  emit(json{{"seed", o.seed},
            {"quick", quick},
            {"all_passed", rep.all_passed},
            {"total_seconds", rep.total_seconds},
            {"checks", checks}},
       o.output);
  return rep.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric coherence and quantum state discrimination toolkit"};
  app.require_subcommand(1);

  CommonOpts coh_opts;
  bool force_numerical = false;
  auto* coh = app.add_subcommand(
      "coherence", "geometric coherence of a density matrix, with the closest "
                   "incoherent state and upper bounds");
  add_common(coh, coh_opts, "density matrix JSON file");
  coh->add_flag("--force-numerical", force_numerical,
                "skip the closed-form dispatch");

  CommonOpts dis_opts;
  std::string method = "search";
  auto* dis = app.add_subcommand(
      "discriminate", "best von Neumann measurement for a pure-state ensemble");
  add_common(dis, dis_opts, "ensemble JSON file");
  dis->add_option("--method", method, "search (default), helstrom or gso")
      ->check(CLI::IsMember({"search", "helstrom", "gso"}));

  CommonOpts qsd_opts;
  int copies = 1;
  auto* qsd = app.add_subcommand(
      "qsd-state", "density operator carrying an ensemble's discrimination "
                   "problem, optionally for several copies");
  add_common(qsd, qsd_opts, "ensemble JSON file");
  qsd->add_option("--copies", copies, "number of copies of each state")
      ->check(CLI::PositiveNumber);

  CommonOpts rec_opts;
  auto* rec = app.add_subcommand(
      "recover", "optimal measurement recovered through the density-operator "
                 "detour, with verification");
  add_common(rec, rec_opts, "ensemble JSON file");

  CommonOpts rep_opts;
  bool quick = false;
  auto* rep = app.add_subcommand(
      "reproduce", "run the built-in verification suite (progress on stderr, "
                   "JSON report on stdout)");
  rep->add_option("-o,--output", rep_opts.output, "write the JSON report here");
  rep->add_option("--seed", rep_opts.seed, "seed for the random fixtures");
  rep->add_flag("--quick", quick, "smaller sample counts");

  int rc = 0;
  coh->callback([&] { rc = cmd_coherence(coh_opts, force_numerical); });
  dis->callback([&] { rc = cmd_discriminate(dis_opts, method); });
  qsd->callback([&] { rc = cmd_qsd_state(qsd_opts, copies); });
  rec->callback([&] { rc = cmd_recover(rec_opts); });
  rep->callback([&] { rc = cmd_reproduce(rep_opts, quick); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cohdisc::DependentEnsemble& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const cohdisc::WrongArity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const cohdisc::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
