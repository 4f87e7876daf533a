#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bps/bigpoly.hpp"
#include "bps/errors.hpp"
#include "bps/koszul.hpp"
#include "bps/lenvec.hpp"
#include "bps/report.hpp"
#include "bps/resolution.hpp"
#include "bps/selfcheck.hpp"
#include "bps/sweep.hpp"
#include "bps/syzord.hpp"

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitResource = 4;

struct Options {
  std::string lengths;
  int a = 1;
  int b = 1;
  std::vector<int> bs;  // verify-conjecture: b values, default {1,2}
  int r = 3;
  int k = 0;
  int entry_bound = 0;  // 0 = r + 1
  int degree_cap = 64;
  long pair_limit = 1000000;
  int threads = 0;  // 0 = hardware concurrency
  std::string out;
  std::string format = "json";
  std::string cache;

  bps::GBLimits limits() const { return {degree_cap, pair_limit}; }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw bps::Error("cannot write output file " + path);
  f << text << '\n';
}

void add_limit_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--degree-cap", o.degree_cap,
                  "abort Groebner runs above this internal degree")
      ->envname("BPS_DEGREE_CAP");
  cmd->add_option("--pair-limit", o.pair_limit,
                  "abort Groebner runs beyond this many S-pairs")
      ->envname("BPS_PAIR_LIMIT");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "write to this file instead of stdout")
      ->envname("BPS_OUT");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->envname("BPS_FORMAT");
}

int run_analyze(const Options& o) {
  const bps::LengthVector l = bps::LengthVector::parse(o.lengths);
  const bps::ChamberReport rep =
      bps::analyze_lengths(l, o.a, o.b, o.limits());
  write_output(o.out, bps::emit_report_json(rep));
  if (!o.out.empty())
    std::cout << rep.chamber_id << " " << rep.representative
              << ": mu=" << rep.mu << " syzord=" << rep.syzord_by_b.at(o.b)
              << " conjecture_ok=" << (rep.conjecture_ok ? "true" : "false")
              << '\n';
  return 0;
}

int run_chambers(const Options& o) {
  const int bound = o.entry_bound > 0 ? o.entry_bound : o.r + 1;
  const bps::ChamberEnumeration en = bps::enumerate_chambers(o.r, bound);
  const std::string text = o.format == "csv"
                               ? bps::chamber_db_csv(en, o.r)
                               : bps::chamber_db_json(en, o.r);
  write_output(o.out, text);
  std::cerr << en.chambers.size() << " chambers, entry bound " << bound
            << (en.stabilized ? ", stabilized" : ", NOT stabilized") << '\n';
  return 0;
}

int run_verify(const Options& o) {
  bps::SweepOptions so;
  so.r = o.r;
  so.bs = o.bs.empty() ? std::vector<int>{1, 2} : o.bs;
  so.entry_bound = o.entry_bound;
  so.threads = o.threads;
  so.limits = o.limits();
  so.cache_path = o.cache;
  const bps::SweepResult res = bps::verify_conjecture_sweep(so);
  write_output(o.out, bps::emit_reports_json(res.reports));
  std::cerr << res.summary() << '\n';
  if (res.violations > 0) return kExitViolation;
  for (const bps::ChamberReport& rep : res.reports)
    if (rep.error.rfind("resource:", 0) == 0) return kExitResource;
  return res.errors > 0 ? 1 : 0;
}

int run_koszul(const Options& o) {
  const bps::KoszulData kd{o.r, o.b};
  const bps::GradedPresentation p = bps::koszul_syzygy_presentation(o.k, kd);
  const bps::FreeResolution res =
      bps::minimal_free_resolution(p, o.r + 2, o.limits());
  bps::KoszulReport rep;
  rep.r = o.r;
  rep.b = o.b;
  rep.k = o.k;
  rep.betti = res.betti();
  rep.hilbert = bps::hilbert_series(p, o.limits()).str();
  rep.syzord = bps::syzygy_order(p, o.limits());
  write_output(o.out,
               o.format == "json" ? bps::emit_koszul_json(rep) : rep.text());
  return 0;
}

int run_selftest(const Options& o) {
  bps::AcceptanceOptions opt;
  opt.threads = o.threads;
  opt.limits = o.limits();
  opt.cache_path = o.cache;
  const std::vector<bps::CriterionResult> results = bps::run_acceptance(opt);
  bool all = true;
  for (const bps::CriterionResult& res : results) {
    std::cout << (res.pass ? "[PASS]" : "[FAIL]") << " criterion "
              << res.index << ": " << res.name << " (" << res.detail << ")\n";
    all = all && res.pass;
  }
  std::cout << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"big polygon space invariants"};
  app.require_subcommand(1);
  Options o;

  CLI::App* analyze =
      app.add_subcommand("analyze", "full report for one length vector");
  analyze->add_option("--lengths", o.lengths, "comma-separated lengths")
      ->required()
      ->envname("BPS_LENGTHS");
  analyze->add_option("--a", o.a, "sphere parameter a")->envname("BPS_A");
  analyze->add_option("--b", o.b, "sphere parameter b")->envname("BPS_B");
  add_limit_flags(analyze, o);
  add_output_flags(analyze, o);

  CLI::App* chambers =
      app.add_subcommand("chambers", "enumerate chambers for rank r");
  chambers->add_option("--r", o.r, "number of edges")
      ->required()
      ->envname("BPS_R");
  chambers->add_option("--entry-bound", o.entry_bound,
                       "max entry of enumerated integer vectors (0: r+1)")
      ->envname("BPS_ENTRY_BOUND");
  add_output_flags(chambers, o);

  CLI::App* verify = app.add_subcommand(
      "verify-conjecture", "check syzord = mu-1 on every chamber of rank r");
  verify->add_option("--r", o.r, "number of edges")
      ->required()
      ->envname("BPS_R");
  verify->add_option("--b", o.bs, "b values to sweep (default 1 2)")
      ->envname("BPS_B");
  verify->add_option("--entry-bound", o.entry_bound,
                     "max entry of enumerated integer vectors (0: r+1)")
      ->envname("BPS_ENTRY_BOUND");
  verify->add_option("--threads", o.threads, "worker threads (0: all cores)")
      ->envname("BPS_THREADS");
  verify->add_option("--cache", o.cache, "syzygy-order cache file (JSON)")
      ->envname("BPS_CACHE");
  add_limit_flags(verify, o);
  add_output_flags(verify, o);

  CLI::App* koszul =
      app.add_subcommand("koszul", "Betti data of the Koszul module K_k");
  koszul->add_option("--r", o.r, "number of variables")
      ->required()
      ->envname("BPS_R");
  koszul->add_option("--b", o.b, "exponent of the Koszul forms")
      ->envname("BPS_B");
  koszul->add_option("--k", o.k, "Koszul index, 0..r+1")->required();
  add_limit_flags(koszul, o);
  add_output_flags(koszul, o);

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full acceptance suite");
  selftest->add_option("--threads", o.threads,
                       "worker threads (0: all cores)")
      ->envname("BPS_THREADS");
  selftest->add_option("--cache", o.cache,
                       "syzygy-order cache file (JSON)")
      ->envname("BPS_CACHE");
  add_limit_flags(selftest, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(o);
    if (chambers->parsed()) return run_chambers(o);
    if (verify->parsed()) return run_verify(o);
    if (koszul->parsed()) return run_koszul(o);
    if (selftest->parsed()) return run_selftest(o);
  } catch (const bps::NonGeneric& ex) {
    std::cerr << "error: non-generic lengths; the subset J = "
              << bps::set_to_string(ex.witness)
              << " ties its complement, l(J) = l(J^c)\n";
    return kExitNonGeneric;
  } catch (const bps::ResourceError& ex) {
    std::cerr << "error: resource cap hit: " << ex.what() << '\n';
    return kExitResource;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
