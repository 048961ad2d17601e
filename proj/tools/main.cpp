#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stylic/cartan.hpp"
#include "stylic/monoid.hpp"
#include "stylic/quiver.hpp"
#include "stylic/verify.hpp"

namespace {

struct RunConfig {
  int n = 2;
  std::string format;
  std::string output = "-";
  bool extended_quiver = false;
  bool memoize_mult = true;
  int max_word_search_length = 0;  // 0 means 2n
  std::uint64_t seed = stylic::VerifyOptions{}.seed;
  bool force = false;
};

unsigned env_threads() {
  const char* v = std::getenv("STYLIC_THREADS");
  if (!v || !*v) return 0;  // auto
  return static_cast<unsigned>(std::strtoul(v, nullptr, 10));
}

// artifact sink: --output path, or stdout for "-"
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  // human-readable report lines go to stdout unless the artifact is already there
  std::ostream& report() { return file_.is_open() ? std::cout : std::cerr; }

 private:
  std::ofstream file_;
};

void require_desk_scale(const RunConfig& cfg) {
  if (cfg.n > 6 && !cfg.force)
    throw CLI::ValidationError("--n", "n > 6 needs --force (sizes grow fast)");
}

stylic::StylMonoid::Options monoid_options(const RunConfig& cfg) {
  return {.memoize_mult = cfg.memoize_mult};
}

int cmd_enumerate(const RunConfig& cfg) {
  auto m = stylic::StylMonoid::enumerate(cfg.n, monoid_options(cfg));
  Sink sink(cfg.output);
  if (cfg.format == "text")
    sink.stream() << "|Styl(" << cfg.n << ")| = " << m.size() << "\n";
  else
    sink.stream() << m.to_json().dump(2) << "\n";
  sink.report() << "|Styl(" << cfg.n << ")| = " << m.size() << "\n";
  return 0;
}

int cmd_idempotents(const RunConfig& cfg) {
  auto m = stylic::StylMonoid::enumerate(cfg.n, monoid_options(cfg));
  stylic::IdempotentSystem sys(m);
  Sink sink(cfg.output);
  sink.stream() << stylic::idempotents_to_json(m, sys).dump(2) << "\n";

  stylic::SystemReport report = stylic::verify_idempotent_system(m, sys);
  auto line = [&](const char* name, bool ok) {
    sink.report() << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
  };
  line("orthogonal idempotents", report.orthogonality_ok);
  line("sum equals 1", report.sum_ok);
  line("primitivity (corner dimensions 1)", report.primitivity_ok);
  line("all nonzero", report.nonzero_ok);
  for (const std::string& f : report.failures) sink.report() << "       " << f << "\n";
  return report.pass() ? 0 : 1;
}

int cmd_quiver(const RunConfig& cfg) {
  stylic::Quiver q =
      cfg.extended_quiver ? stylic::Quiver::extended(cfg.n) : stylic::Quiver::plain(cfg.n);
  Sink sink(cfg.output);
  if (cfg.format == "json")
    sink.stream() << q.to_json().dump(2) << "\n";
  else
    sink.stream() << q.to_dot();
  return 0;
}

int cmd_cartan(const RunConfig& cfg) {
  auto m = stylic::StylMonoid::enumerate(cfg.n, monoid_options(cfg));
  stylic::IdempotentSystem sys(m);
  stylic::CartanMatrix lin = stylic::cartan_linear(m, sys, env_threads());
  stylic::CartanMatrix comb = stylic::cartan_combinatorial(m);
  bool equal = lin == comb;

  Sink sink(cfg.output);
  if (cfg.format == "json") {
    nlohmann::json doc = {{"n", cfg.n},
                          {"linear", lin.to_json()},
                          {"combinatorial", comb.to_json()},
                          {"equal", equal}};
    sink.stream() << doc.dump(2) << "\n";
  } else if (cfg.format == "text") {
    sink.stream() << "Cartan matrix (corner dimensions):\n" << lin.to_csv(m.alphabet());
    sink.stream() << "Cartan matrix (eta/rfix counts):\n" << comb.to_csv(m.alphabet());
  } else {
    sink.stream() << lin.to_csv(m.alphabet());
  }
  sink.report() << "cartan matrices equal: " << (equal ? "yes" : "NO") << "\n";
  return equal ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  // the suite at n subsumes the suites at every smaller alphabet, so all
  // of them run and report
  std::vector<std::pair<int, std::vector<stylic::CheckResult>>> runs;
  for (int m = 1; m <= cfg.n; ++m) {
    stylic::VerifyOptions opts;
    opts.n = m;
    opts.seed = cfg.seed;
    opts.memoize_mult = cfg.memoize_mult;
    opts.max_word_search_length = cfg.max_word_search_length;
    opts.threads = env_threads();
    runs.emplace_back(m, stylic::run_verification(opts));
  }

  std::size_t failed = 0, total = 0;
  for (const auto& [m, results] : runs)
    for (const auto& r : results) {
      ++total;
      if (!r.pass) ++failed;
    }

  Sink sink(cfg.output);
  if (cfg.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [m, results] : runs)
      for (const auto& r : results)
        doc.push_back(
            {{"n", m}, {"group", r.group}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    sink.stream() << nlohmann::json{{"n", cfg.n}, {"seed", cfg.seed}, {"checks", doc}}.dump(2)
                  << "\n";
  } else {
    std::ostream& os = sink.stream();
    os << "verification up to n = " << cfg.n << " (seed " << cfg.seed << ")\n";
    for (const auto& [m, results] : runs)
      for (const auto& r : results)
        os << (r.pass ? "[PASS] " : "[FAIL] ") << "n=" << m << " " << r.group << "/" << r.name
           << ": " << r.detail << "\n";
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) FAILED")
       << " (" << total << " total)\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

namespace {

int run_cli(int argc, char** argv) {
  CLI::App app{"stylic: exact computations in the stylic monoid and its algebra"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::pair<CLI::App*, std::string>> format_defaults;
  auto add_common = [&](CLI::App* sub, const char* default_format,
                        const std::vector<std::string>& formats) {
    sub->add_option("--n", cfg.n, "alphabet size")->required()->check(CLI::Range(1, 16));
    sub->add_option("--format", cfg.format, std::string("output format (default ") + default_format + ")")
        ->check(CLI::IsMember(formats));
    sub->add_option("--output,-o", cfg.output, "output path, - for stdout");
    format_defaults.emplace_back(sub, default_format);
    return sub;
  };

  auto* enumerate = add_common(app.add_subcommand("enumerate", "enumerate Styl(A) and export it"),
                               "json", {"json", "text"});
  enumerate->add_flag("--memoize-mult,!--no-memoize-mult", cfg.memoize_mult,
                      "precompute the multiplication table");

  auto* idempotents = add_common(
      app.add_subcommand("idempotents", "build the primitive orthogonal idempotents and verify them"),
      "json", {"json"});
  idempotents->add_flag("--memoize-mult,!--no-memoize-mult", cfg.memoize_mult);

  auto* quiver =
      add_common(app.add_subcommand("quiver", "export the quiver"), "dot", {"dot", "json"});
  quiver->add_flag("--extended-quiver", cfg.extended_quiver, "include the loops");

  auto* cartan = add_common(app.add_subcommand("cartan", "Cartan matrix by both methods"), "csv",
                            {"csv", "json", "text"});
  cartan->add_flag("--memoize-mult,!--no-memoize-mult", cfg.memoize_mult);
  cartan->add_flag("--force", cfg.force, "allow n > 6");

  auto* verify = add_common(app.add_subcommand("verify", "run the full verification suite"),
                            "text", {"text", "json"});
  verify->add_flag("--memoize-mult,!--no-memoize-mult", cfg.memoize_mult);
  verify->add_flag("--force", cfg.force, "allow n > 6");
  verify->add_option("--seed", cfg.seed, "seed for the sampled checks");
  verify->add_option("--max-word-search-length", cfg.max_word_search_length,
                     "bound for the basis word search (default 2n)");

  try {
    app.parse(argc, argv);
    for (const auto& [sub, fmt] : format_defaults)
      if (sub->parsed() && sub->count("--format") == 0) cfg.format = fmt;
    if (cartan->parsed() || verify->parsed()) require_desk_scale(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (idempotents->parsed()) return cmd_idempotents(cfg);
    if (quiver->parsed()) return cmd_quiver(cfg);
    if (cartan->parsed()) return cmd_cartan(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
