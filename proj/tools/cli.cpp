#include "cli.hpp"

#include <fstream>
#include <limits>
#include <locale>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "minusone/eigensolver.hpp"
#include "minusone/errors.hpp"
#include "minusone/little_jacobi.hpp"
#include "minusone/susy.hpp"

namespace minusone::cli {
namespace {

std::string join_coeffs(const Poly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ',';
    out += c.str();
  }
  return out.empty() ? "0/1" : out;
}

void write_weight_csv(std::ostream& os, const ParamPair& p, std::size_t points) {
  os << "x,w\n";
  for (std::size_t i = 0; i < points; ++i) {
    const double x = -1.0 + (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(points);
    double w = 0.0;
    try {
      w = weight_eval(p, x);
    } catch (const DomainError&) {
      w = std::numeric_limits<double>::infinity();
    }
    os << fmt::format("{:.17g},{:.17g}\n", x, w);
  }
}

void write_potential_csv(std::ostream& os, const susy::SchrodingerParams& a, std::size_t points) {
  os << "y,U\n";
  for (double y : susy::make_grid(points)) os << fmt::format("{:.17g},{:.17g}\n", y, susy::potential(a, y));
}

// Either the requested file or the caller's stream, both with the classic
// locale.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
    out_->imbue(std::locale::classic());
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

}  // namespace

int cmd_table(const SuiteConfig& cfg, std::ostream& out) {
  const ParamPair p(cfg.alpha, cfg.beta);
  const std::size_t N = cfg.max_degree.value_or(10);
  if (N < 1) throw DomainError("--n must be >= 1");
  const std::vector<Poly> family = generate_family(p, N);
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n = 1; n <= N; ++n) {
      const RecurrenceCoeffs rc = recurrence_coeffs(p, n);
      rows.push_back({{"n", n},
                      {"u_n", rc.u->str()},
                      {"b_n", rc.b.str()},
                      {"lambda_n", eigenvalue(p, n).str()},
                      {"coefficients", to_json(family[n])}});
    }
    out << nlohmann::json{{"params", p.to_json()}, {"b_0", recurrence_coeffs(p, 0).b.str()}, {"rows", rows}}.dump(2)
        << '\n';
    return kPass;
  }
  out << "n,u_n,b_n,lambda_n,coefficients\n";
  for (std::size_t n = 1; n <= N; ++n) {
    const RecurrenceCoeffs rc = recurrence_coeffs(p, n);
    out << fmt::format("{},{},{},{},\"{}\"\n", n, rc.u->str(), rc.b.str(), eigenvalue(p, n).str(),
                       join_coeffs(family[n]));
  }
  return kPass;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg, std::ostream& out) {
  if (!is_suite(suite)) throw DomainError("unknown suite '" + suite + "'");
  const std::vector<CheckLine> lines = run_suite(suite, cfg);
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& l : lines) {
    if (l.skipped) ++skipped;
    else if (!l.pass) ++failed;
  }
  const std::size_t passed = lines.size() - failed - skipped;
  if (cfg.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& l : lines) {
      checks.push_back({{"suite", l.suite}, {"check", l.check}, {"pass", l.pass}, {"skipped", l.skipped},
                        {"detail", l.detail}});
    }
    out << nlohmann::json{{"suite", suite}, {"checks", checks}, {"passed", passed}, {"failed", failed},
                          {"skipped", skipped}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& l : lines) {
      const char* tag = l.skipped ? "SKIP" : (l.pass ? "PASS" : "FAIL");
      out << fmt::format("{} {:<13} {:<52} {}\n", tag, l.suite, l.check, l.detail);
    }
    out << fmt::format("summary: {} passed, {} failed, {} skipped\n", passed, failed, skipped);
  }
  return failed == 0 ? kPass : kCheckFailure;
}

int cmd_sample(const std::string& target, const SuiteConfig& cfg, std::ostream& out) {
  if (cfg.points < 2) throw DomainError("--points must be >= 2");
  if (target == "weight") {
    write_weight_csv(out, ParamPair(cfg.alpha, cfg.beta), cfg.points);
  } else if (target == "eigenfunction") {
    eigen::write_sample_csv(out, ParamPair(cfg.alpha, cfg.beta), cfg.lambda, cfg.points);
  } else if (target == "wavefunction") {
    susy::write_sample_csv(out, susy::SchrodingerParams(cfg.a), cfg.max_degree.value_or(cfg.levels), cfg.points);
  } else if (target == "potential") {
    write_potential_csv(out, susy::SchrodingerParams(cfg.a), cfg.points);
  } else {
    throw DomainError("unknown sample target '" + target + "'");
  }
  return kPass;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Little -1 Jacobi polynomials: tables, verification suites and samples", "minusone"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string alpha = "1/2";
  std::string beta = "3/2";
  std::string a = "3/2";
  std::size_t n = 0;
  std::string suite = "all";
  std::string target;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha, "alpha as p/q, > -1")->capture_default_str();
    sub->add_option("--beta", beta, "beta as p/q, > -1")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(formats))
        ->default_val(formats.front())
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };

  CLI::App* table = app.add_subcommand("table", "recurrence coefficients, eigenvalues and monic P_n, rows n = 1..N");
  add_family(table);
  table->add_option("--n", n, "largest degree (>= 1)")->default_val(10)->capture_default_str();
  add_output(table, {"csv", "json"});

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff every check passes");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()))->capture_default_str();
  add_family(verify);
  verify->add_option("--a", a, "well parameter a as p/q, > 1/2 (susy)")->capture_default_str();
  verify->add_option("--n", n,
                     "largest degree; defaults: orthogonality/eigen 20, explicit/dunkl/transforms 12, "
                     "raising/prop2/qlimit 10, aw truncation 24");
  verify->add_option("--levels", cfg.levels, "highest wavefunction level (susy)")->capture_default_str();
  verify->add_option("--eps", cfg.epsilon_list, "two deformation parameters eps1 > eps2 (qlimit)")
      ->expected(2)
      ->capture_default_str();
  verify->add_option("--points", cfg.points, "y samples (susy)")->capture_default_str();
  add_output(verify, {"text", "json"});

  CLI::App* sample = app.add_subcommand("sample", "CSV samples for plotting");
  sample->add_option("target", target, "weight | eigenfunction | wavefunction | potential")
      ->required()
      ->check(CLI::IsMember({"weight", "eigenfunction", "wavefunction", "potential"}));
  add_family(sample);
  sample->add_option("--a", a, "well parameter a as p/q, > 1/2")->capture_default_str();
  sample->add_option("--n", n, "highest wavefunction level (defaults to --levels)");
  sample->add_option("--levels", cfg.levels, "highest wavefunction level")->capture_default_str();
  sample->add_option("--lambda", cfg.lambda, "spectral parameter (eigenfunction)")->capture_default_str();
  sample->add_option("--points", cfg.points, "number of samples")->capture_default_str();
  add_output(sample, {"csv"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsageError;
  }

  try {
    cfg.alpha = Rational::parse(alpha);
    cfg.beta = Rational::parse(beta);
    cfg.a = Rational::parse(a);
    if (cfg.alpha <= Rational(-1)) throw DomainError("alpha must be > -1");
    if (cfg.beta <= Rational(-1)) throw DomainError("beta must be > -1");
    CLI::App* active = app.get_subcommands().front();
    if (active->count("--n") > 0 || active == table) cfg.max_degree = n;
    Sink sink(cfg.output, out);
    if (active == table) return cmd_table(cfg, sink.stream());
    if (active == verify) return cmd_verify(suite, cfg, sink.stream());
    return cmd_sample(target, cfg, sink.stream());
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal check failure: " << e.what() << '\n';
    return kCheckFailure;
  }
}

}  // namespace minusone::cli
