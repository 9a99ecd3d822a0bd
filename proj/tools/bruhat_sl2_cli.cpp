// Command-line front end: verification sweeps, single-instance computations,
// diagnostics and serialization for weak-order interval combinatorics.
//
// Exit codes: 0 success, 2 refutation (a verified identity failed), 3
// inconclusive (size bound), 64 usage, 65 non-132-avoiding input, 66
// interval-membership violation.

#include <CLI11.hpp>

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bruhat_sl2/bruhat_sl2.hpp"

namespace {

using namespace bruhat_sl2;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;
constexpr int kExitNon132 = 65;
constexpr int kExitMembership = 66;
constexpr int kExitInternal = 1;

struct GlobalOptions {
  std::string format = "json";
  int workers = 0;  // 0 = available parallelism
  std::size_t max_interval = 0;
  std::string out_path;
};

void require_json_format(const GlobalOptions& opts, const char* command) {
  if (opts.format != "json")
    throw ParseError(std::string(command) + " emits newline-delimited JSON; --format " +
                     opts.format + " is not supported here");
}

std::size_t interval_bound(const GlobalOptions& opts) {
  if (opts.max_interval > 0) return opts.max_interval;
  if (const char* env = std::getenv("BRUHAT_SL2_MAX_INTERVAL")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ParseError(std::string("BRUHAT_SL2_MAX_INTERVAL is not a positive integer: ") + env);
  }
  return WeakInterval::kDefaultMaxElements;
}

int worker_count(const GlobalOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::ostream& output_stream(const GlobalOptions& opts, std::ofstream& file) {
  if (opts.out_path.empty()) return std::cout;
  file.open(opts.out_path);
  if (!file) throw Error("cannot open output file " + opts.out_path);
  return file;
}

std::vector<Permutation> tops_for_n(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> tops;
  do {
    Permutation candidate(word);
    if (avoids_132(candidate)) tops.push_back(std::move(candidate));
  } while (std::next_permutation(word.begin(), word.end()));
  return tops;
}

/// Runs fn(index) for every index across a worker pool and emits the
/// produced lines in index order as soon as each prefix is complete, so
/// long sweeps stream progress without ever reordering output.
void run_ordered(std::size_t count, int workers, std::ostream& out,
                 const std::function<std::string(std::size_t)>& fn) {
  if (count == 0) return;
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out << fn(i) << "\n";
    return;
  }
  std::vector<std::optional<std::string>> slots(count);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        std::string line;
        std::exception_ptr error = nullptr;
        try {
          line = fn(i);
        } catch (...) {
          error = std::current_exception();
        }
        std::lock_guard<std::mutex> lock(mu);
        if (error && !first_error) first_error = error;
        slots[i] = std::move(line);
        cv.notify_all();
      }
    });
  }
  std::size_t emitted = 0;
  {
    std::unique_lock<std::mutex> lock(mu);
    while (emitted < count) {
      cv.wait(lock, [&] { return slots[emitted].has_value() || first_error; });
      if (first_error) break;
      while (emitted < count && slots[emitted].has_value()) {
        out << *slots[emitted] << "\n";
        slots[emitted].reset();
        ++emitted;
      }
    }
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<int> sweep_sizes(const std::optional<int>& n, const std::optional<int>& n_min,
                             const std::optional<int>& n_max) {
  std::vector<int> sizes;
  if (n) {
    sizes.push_back(*n);
  } else if (n_min || n_max) {
    const int lo = n_min.value_or(1);
    const int hi = n_max.value_or(lo);
    if (lo < 1 || hi < lo) throw ParseError("bad n range");
    for (int k = lo; k <= hi; ++k) sizes.push_back(k);
  }
  return sizes;
}

int cmd_verify_sl2(const GlobalOptions& opts, const std::optional<std::string>& pi_text,
                   const std::optional<int>& n, const std::optional<int>& n_min,
                   const std::optional<int>& n_max) {
  require_json_format(opts, "verify-sl2");
  std::ofstream file;
  std::ostream& out = output_stream(opts, file);
  const std::size_t bound = interval_bound(opts);

  if (pi_text) {
    const Permutation pi = parse_permutation(*pi_text);
    if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
    const Sl2Report report = verify_sl2(pi, bound);
    out << to_json(report).dump() << "\n";
    return report.passed() ? kExitOk : kExitRefuted;
  }

  const std::vector<int> sizes = sweep_sizes(n, n_min, n_max);
  if (sizes.empty()) throw ParseError("verify-sl2 needs --pi or an n range");
  std::vector<Permutation> tops;
  for (int size : sizes)
    for (auto& pi : tops_for_n(size)) tops.push_back(std::move(pi));

  std::atomic<std::size_t> failed{0};
  run_ordered(tops.size(), worker_count(opts), out, [&](std::size_t i) {
    const Sl2Report report = verify_sl2(tops[i], bound);
    if (!report.passed()) failed.fetch_add(1);
    return to_json(report).dump();
  });
  Json summary;
  summary["summary"] = {{"n", sizes},
                        {"tops", tops.size()},
                        {"passed", tops.size() - failed.load()},
                        {"failed", failed.load()}};
  out << summary.dump() << "\n";
  return failed.load() == 0 ? kExitOk : kExitRefuted;
}

int certificate_exit(const std::vector<SpernerVerdict>& verdicts) {
  bool any_refuted = false, any_inconclusive = false;
  for (SpernerVerdict v : verdicts) {
    if (v == SpernerVerdict::refuted) any_refuted = true;
    if (v == SpernerVerdict::inconclusive) any_inconclusive = true;
  }
  if (any_refuted) return kExitRefuted;
  if (any_inconclusive) return kExitInconclusive;
  return kExitOk;
}

int cmd_sperner(const GlobalOptions& opts, const std::optional<std::string>& pi_text,
                const std::optional<int>& n, const std::optional<int>& n_min,
                const std::optional<int>& n_max, bool with_oracle) {
  require_json_format(opts, "sperner");
  std::ofstream file;
  std::ostream& out = output_stream(opts, file);
  const std::size_t bound = interval_bound(opts);

  auto certify_line = [&](const Permutation& pi, SpernerVerdict& verdict) {
    const SpernerCertificate cert = certify_sperner(pi, bound);
    verdict = cert.verdict;
    Json doc = to_json(cert);
    if (with_oracle && cert.verdict != SpernerVerdict::inconclusive)
      doc["oracle"] = to_json(run_sperner_oracles(build_interval(pi, bound)));
    return doc.dump();
  };

  if (pi_text) {
    const Permutation pi = parse_permutation(*pi_text);
    if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
    SpernerVerdict verdict;
    out << certify_line(pi, verdict) << "\n";
    return certificate_exit({verdict});
  }

  const std::vector<int> sizes = sweep_sizes(n, n_min, n_max);
  if (sizes.empty()) throw ParseError("sperner needs --pi or an n range");
  std::vector<Permutation> tops;
  for (int size : sizes)
    for (auto& pi : tops_for_n(size)) tops.push_back(std::move(pi));

  std::vector<SpernerVerdict> verdicts(tops.size(), SpernerVerdict::inconclusive);
  run_ordered(tops.size(), worker_count(opts), out,
              [&](std::size_t i) { return certify_line(tops[i], verdicts[i]); });
  int certified = 0, refuted = 0, inconclusive = 0;
  for (SpernerVerdict v : verdicts) {
    if (v == SpernerVerdict::certified) ++certified;
    if (v == SpernerVerdict::refuted) ++refuted;
    if (v == SpernerVerdict::inconclusive) ++inconclusive;
  }
  Json summary;
  summary["summary"] = {{"n", sizes},
                        {"tops", tops.size()},
                        {"certified", certified},
                        {"refuted", refuted},
                        {"inconclusive", inconclusive}};
  out << summary.dump() << "\n";
  return certificate_exit(verdicts);
}

int cmd_schubert(const GlobalOptions& opts, const std::string& perm_text, bool want_spec,
                 bool want_macdonald, const std::optional<std::string>& chain_pi,
                 const std::optional<std::string>& all_three_pi, bool want_poly) {
  require_json_format(opts, "schubert");
  std::ofstream file;
  std::ostream& out = output_stream(opts, file);
  const std::size_t bound = interval_bound(opts);
  const Permutation sigma = parse_permutation(perm_text);
  if (!want_spec && !want_macdonald && !chain_pi && !all_three_pi && !want_poly)
    throw ParseError("schubert needs at least one of --spec, --macdonald, --chain-sum, "
                     "--all-three, --poly");

  SchubertTable table;
  Json doc;
  doc["perm"] = to_string(sigma);
  bool refuted = false;
  if (want_spec || all_three_pi) doc["spec"] = to_string(principal_specialization(table, sigma));
  if (want_macdonald || all_three_pi) doc["macdonald"] = to_string(macdonald_sum(sigma));
  const std::optional<std::string> pi_text = all_three_pi ? all_three_pi : chain_pi;
  if (pi_text) {
    const Permutation pi = parse_permutation(*pi_text);
    if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
    doc["pi"] = to_string(pi);
    doc["chain_sum"] = to_string(chain_sum(sigma, pi, bound));
  }
  if (all_three_pi) {
    const bool agree = doc["spec"] == doc["macdonald"] && doc["spec"] == doc["chain_sum"];
    doc["agree"] = agree;
    refuted = !agree;
  }
  if (want_poly) doc["poly"] = to_json(table.schubert(sigma));
  out << doc.dump() << "\n";
  return refuted ? kExitRefuted : kExitOk;
}

int cmd_diag_sign_grid(const GlobalOptions& opts, const std::string& pi_text,
                       const std::string& sigma_text, bool check) {
  if (opts.format == "dot") throw ParseError("diag supports --format json or table");
  std::ofstream file;
  std::ostream& out = output_stream(opts, file);
  const Permutation pi = parse_permutation(pi_text);
  const Permutation sigma = parse_permutation(sigma_text);
  if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
  const SignGrid grid = sign_grid(sigma, pi);
  if (opts.format == "table")
    out << render_table(grid);
  else
    out << to_json(grid, sigma, pi).dump(2) << "\n";
  if (check) {
    std::vector<std::string> bad;
    const long want = static_cast<long>(pi.size()) * (pi.size() - 1) / 2 - length(pi);
    if (grid.weighted_sum() != want)
      bad.push_back("weighted sum " + std::to_string(grid.weighted_sum()) +
                    " != " + std::to_string(want));
    for (int j = 1; j <= pi.size(); ++j)
      for (const auto& msg : check_path_lemmas(sigma, pi, j)) bad.push_back(msg);
    for (const auto& msg : bad) std::cerr << "check failed: " << msg << "\n";
    if (!bad.empty()) return kExitRefuted;
  }
  return kExitOk;
}

int cmd_diag_path(const GlobalOptions& opts, const std::string& pi_text,
                  const std::string& sigma_text, int column, bool check) {
  if (opts.format == "dot") throw ParseError("diag supports --format json or table");
  std::ofstream file;
  std::ostream& out = output_stream(opts, file);
  const Permutation pi = parse_permutation(pi_text);
  const Permutation sigma = parse_permutation(sigma_text);
  if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
  if (column < 1 || column > pi.size())
    throw ParseError("--col must be a value in 1.." + std::to_string(pi.size()));
  const PermutationPath path = permutation_path(sigma, pi, column);
  if (opts.format == "table")
    out << render_table(path);
  else
    out << to_json(path, sigma, pi).dump(2) << "\n";
  if (check) {
    const auto bad = check_path_lemmas(sigma, pi, column);
    for (const auto& msg : bad) std::cerr << "check failed: " << msg << "\n";
    if (!bad.empty()) return kExitRefuted;
  }
  return kExitOk;
}

int cmd_diag_diamond(const GlobalOptions& opts, const std::string& pi_text,
                     const std::string& sigma_text, const std::string& tau_text, bool check) {
  if (opts.format == "dot") throw ParseError("diag supports --format json or table");
  std::ofstream file;
  std::ostream& out = output_stream(opts, file);
  const Permutation pi = parse_permutation(pi_text);
  const Permutation sigma = parse_permutation(sigma_text);
  const Permutation tau = parse_permutation(tau_text);
  if (!avoids_132(pi)) throw Non132Avoiding(to_string(pi) + " contains the pattern 132");
  const auto pair = diamond_complete(sigma, tau, pi);
  out << diamond_json(sigma, tau, pi, pair).dump(2) << "\n";
  if (check && pair) {
    // up weights across the diamond must agree
    auto cover_of = [](const Permutation& lo, const Permutation& hi) {
      for (const auto& cov : strong_up_covers(lo))
        if (cov.target == hi) return std::pair<int, int>{cov.i, cov.j};
      throw TheoremViolation("expected strong cover is missing");
    };
    const auto [bi, bj] = cover_of(pair->beta, sigma);
    const auto [ti, tj] = cover_of(tau, pair->alpha);
    if (weight(pair->beta, bi, bj, pi) != weight(tau, ti, tj, pi)) {
      std::cerr << "check failed: up weights across the diamond differ\n";
      return kExitRefuted;
    }
  }
  return kExitOk;
}

int cmd_hasse(const GlobalOptions& opts, const std::string& pi_text,
              const std::string& order_text) {
  if (opts.format == "table") throw ParseError("hasse supports --format dot or json");
  std::ofstream file;
  std::ostream& out = output_stream(opts, file);
  const Permutation pi = parse_permutation(pi_text);
  const WeakInterval I = build_interval(pi, interval_bound(opts));
  const OrderKind order = order_text == "strong" ? OrderKind::strong : OrderKind::weak;
  const HasseFormat format = opts.format == "json" ? HasseFormat::json : HasseFormat::dot;
  out << hasse_export(I, order, format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for weak-order interval combinatorics: the sl2 action on "
               "132-avoiding intervals, Sperner certification, and principal "
               "specializations of Schubert polynomials"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name
  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format (json | dot | table)")
      ->check(CLI::IsMember({"json", "dot", "table"}))
      ->capture_default_str();
  app.add_option("--workers", opts.workers, "worker threads for sweeps (default: all cores)");
  app.add_option("--max-interval", opts.max_interval,
                 "interval element bound (overrides BRUHAT_SL2_MAX_INTERVAL)");
  app.add_option("--out", opts.out_path, "write output to this file instead of stdout");

  // verify-sl2
  auto* verify = app.add_subcommand("verify-sl2", "check the sl2 relations on [e,pi]_R");
  std::optional<std::string> verify_pi;
  std::optional<int> verify_n, verify_n_min, verify_n_max;
  auto* verify_pi_opt = verify->add_option("--pi", verify_pi, "a single 132-avoiding top");
  auto* verify_n_opt = verify->add_option("--n", verify_n, "sweep all 132-avoiding tops in S_n");
  auto* verify_nmin_opt = verify->add_option("--n-min", verify_n_min, "sweep range start");
  auto* verify_nmax_opt = verify->add_option("--n-max", verify_n_max, "sweep range end");
  verify_pi_opt->excludes(verify_n_opt)->excludes(verify_nmin_opt)->excludes(verify_nmax_opt);
  verify_n_opt->excludes(verify_nmin_opt)->excludes(verify_nmax_opt);

  // sperner
  auto* sperner = app.add_subcommand("sperner", "certify the strong Sperner property");
  std::optional<std::string> sperner_pi;
  std::optional<int> sperner_n, sperner_n_min, sperner_n_max;
  bool sperner_oracle = false;
  auto* sperner_pi_opt = sperner->add_option("--pi", sperner_pi, "a single 132-avoiding top");
  auto* sperner_n_opt = sperner->add_option("--n", sperner_n, "sweep all tops in S_n");
  auto* sperner_nmin_opt = sperner->add_option("--n-min", sperner_n_min, "sweep range start");
  auto* sperner_nmax_opt = sperner->add_option("--n-max", sperner_n_max, "sweep range end");
  sperner->add_flag("--oracle", sperner_oracle, "add antichain/brute-force cross-checks");
  sperner_pi_opt->excludes(sperner_n_opt)->excludes(sperner_nmin_opt)->excludes(sperner_nmax_opt);
  sperner_n_opt->excludes(sperner_nmin_opt)->excludes(sperner_nmax_opt);

  // schubert
  auto* schubert = app.add_subcommand("schubert", "principal specializations three ways");
  std::string schubert_perm;
  bool schubert_spec = false, schubert_macdonald = false, schubert_poly = false;
  std::optional<std::string> schubert_chain_pi, schubert_all_pi;
  schubert->add_option("--perm", schubert_perm, "the permutation sigma")->required();
  schubert->add_flag("--spec", schubert_spec, "divided-difference route");
  schubert->add_flag("--macdonald", schubert_macdonald, "reduced-word route");
  schubert->add_option("--chain-sum", schubert_chain_pi, "strong-chain route through this top");
  schubert->add_option("--all-three", schubert_all_pi,
                       "compute all three routes through this top and assert equality");
  schubert->add_flag("--poly", schubert_poly, "print the Schubert polynomial");

  // diag
  auto* diag = app.add_subcommand("diag", "proof-structure diagnostics");
  diag->require_subcommand(1);
  std::string diag_pi, diag_sigma, diag_tau;
  int diag_col = 1;
  bool diag_check = false;
  auto* grid_cmd = diag->add_subcommand("sign-grid", "sign grid of (sigma, pi)");
  grid_cmd->add_option("--pi", diag_pi)->required();
  grid_cmd->add_option("--sigma", diag_sigma)->required();
  grid_cmd->add_flag("--check", diag_check, "assert the grid identities");
  auto* path_cmd = diag->add_subcommand("path", "permutation path for a column value");
  path_cmd->add_option("--pi", diag_pi)->required();
  path_cmd->add_option("--sigma", diag_sigma)->required();
  path_cmd->add_option("--col", diag_col, "column value j")->required();
  path_cmd->add_flag("--check", diag_check, "assert the path lemmas");
  auto* diamond_cmd = diag->add_subcommand("diamond", "complete the diamond over sigma, tau");
  diamond_cmd->add_option("--pi", diag_pi)->required();
  diamond_cmd->add_option("--sigma", diag_sigma)->required();
  diamond_cmd->add_option("--tau", diag_tau)->required();
  diamond_cmd->add_flag("--check", diag_check, "assert weight symmetry");

  // hasse
  auto* hasse = app.add_subcommand("hasse", "export the interval Hasse diagram");
  std::string hasse_pi, hasse_order = "weak";
  hasse->add_option("--pi", hasse_pi)->required();
  hasse->add_option("--order", hasse_order, "weak | strong")
      ->check(CLI::IsMember({"weak", "strong"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return kExitOk;
    (void)code;
    return kExitUsage;
  }

  try {
    if (verify->parsed())
      return cmd_verify_sl2(opts, verify_pi, verify_n, verify_n_min, verify_n_max);
    if (sperner->parsed())
      return cmd_sperner(opts, sperner_pi, sperner_n, sperner_n_min, sperner_n_max,
                         sperner_oracle);
    if (schubert->parsed())
      return cmd_schubert(opts, schubert_perm, schubert_spec, schubert_macdonald,
                          schubert_chain_pi, schubert_all_pi, schubert_poly);
    if (diag->parsed()) {
      if (grid_cmd->parsed()) return cmd_diag_sign_grid(opts, diag_pi, diag_sigma, diag_check);
      if (path_cmd->parsed())
        return cmd_diag_path(opts, diag_pi, diag_sigma, diag_col, diag_check);
      if (diamond_cmd->parsed())
        return cmd_diag_diamond(opts, diag_pi, diag_sigma, diag_tau, diag_check);
    }
    if (hasse->parsed()) return cmd_hasse(opts, hasse_pi, hasse_order);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Non132Avoiding& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNon132;
  } catch (const NotBelowPi& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMembership;
  } catch (const NotInInterval& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMembership;
  } catch (const IntervalTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
