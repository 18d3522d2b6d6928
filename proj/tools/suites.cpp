#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "minusone/aw_algebra.hpp"
#include "minusone/banded_op.hpp"
#include "minusone/errors.hpp"
#include "minusone/little_jacobi.hpp"
#include "minusone/report.hpp"
#include "minusone/susy.hpp"
#include "minusone/transforms.hpp"

namespace minusone::cli {
namespace {

using Task = std::function<CheckLine()>;

// Execution order is shuffled when MINUSONE_SEED is set; results keep their
// task index either way.
std::vector<std::size_t> launch_order(std::size_t count) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  if (const char* seed = std::getenv("MINUSONE_SEED")) {
    std::mt19937_64 rng(std::strtoull(seed, nullptr, 10));
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

std::vector<CheckLine> run_tasks(const std::vector<Task>& tasks) {
  std::vector<CheckLine> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const std::vector<std::size_t> order = launch_order(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      const std::size_t t = order[i];
      try {
        results[t] = tasks[t]();
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(hw, tasks.size()); ++w) pool.emplace_back(worker);
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::size_t degree_or(const SuiteConfig& cfg, std::size_t fallback) { return cfg.max_degree.value_or(fallback); }

CheckLine from_report(const std::string& suite, const CheckReport& r) {
  CheckLine line{suite, fmt::format("{} n={}", r.check, r.n), r.holds, false, {}, {}};
  line.detail = r.first_mismatch_degree ? fmt::format("first mismatch at x^{}", *r.first_mismatch_degree)
                                        : "coefficient-exact";
  return line;
}

CheckLine from_op_report(const std::string& suite, const std::string& check, const OpIdentityReport& r) {
  CheckLine line{suite, check, r.holds, false, {}, {}};
  line.detail = r.first_failing_monomial
                    ? fmt::format("first failing monomial x^{}", *r.first_failing_monomial)
                    : fmt::format("exact on x^0..x^{}", r.safe_degree);
  return line;
}

CheckLine from_numeric(const std::string& suite, const std::string& check, const susy::NumericCheck& c) {
  return {suite, check, c.holds, false, fmt::format("worst={:.3e} tol={:.0e}", c.worst, c.tolerance), c.worst};
}

std::vector<Task> orthogonality_tasks(const ParamPair& p, std::size_t N) {
  auto family = std::make_shared<std::vector<Poly>>(generate_family(p, N));
  auto functional = std::make_shared<MomentFunctional>(moments(p, 2 * N));
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= N; ++n) {
    tasks.emplace_back([=] {
      const auto& P = *family;
      CheckLine line{"orthogonality", fmt::format("orthogonal n={}", n), true, false, {}, {}};
      for (std::size_t m = 0; m < n; ++m) {
        const Rational ip = inner_product(*functional, P[n], P[m]);
        if (!ip.is_zero()) {
          line.pass = false;
          line.detail = fmt::format("<P{},P{}> = {}", n, m, ip.str());
          return line;
        }
      }
      Rational expected(1);
      for (std::size_t k = 1; k <= n; ++k) expected *= *recurrence_coeffs(p, k).u;
      const Rational norm = inner_product(*functional, P[n], P[n]);
      line.pass = norm == expected;
      line.detail = line.pass ? fmt::format("norm = {}", norm.str())
                              : fmt::format("norm {} != product of u_k {}", norm.str(), expected.str());
      return line;
    });
  }
  const std::size_t hankel_max = std::min<std::size_t>(N, 10);
  tasks.emplace_back([=] {
    for (std::size_t n = 0; n <= hankel_max; ++n) {
      const Rational d = hankel_determinant(*functional, n);
      if (d.sign() <= 0) {
        return CheckLine{"orthogonality", "hankel positive", false, false, fmt::format("Delta_{} = {}", n, d.str()), {}};
      }
    }
    return CheckLine{"orthogonality", "hankel positive", true, false, fmt::format("Delta_0..Delta_{} > 0", hankel_max), {}};
  });
  return tasks;
}

std::vector<Task> eigen_tasks(const ParamPair& p, std::size_t N) {
  auto L0 = std::make_shared<BandedOp>(make_L0(p.alpha(), p.beta(), N));
  auto family = std::make_shared<std::vector<Poly>>(generate_family(p, N));
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= N; ++n) {
    tasks.emplace_back([=] {
      const Poly& P = (*family)[n];
      return from_report("eigen", compare_polys("L0 P = lambda P", p.to_json(), n, L0->apply(P), P * eigenvalue(p, n)));
    });
  }
  return tasks;
}

std::vector<Task> explicit_tasks(const ParamPair& p, std::size_t N) {
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= N; ++n) {
    tasks.emplace_back([=] {
      return from_report("explicit",
                         compare_polys("explicit = recurrence", p.to_json(), n, explicit_poly(p, n), generate_monic(p, n)));
    });
  }
  return tasks;
}

std::vector<Task> dunkl_tasks(const ParamPair& p, std::size_t N) {
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= N; ++n) {
    tasks.emplace_back([=] { return from_report("dunkl", dunkl_classical_check(p, n)); });
  }
  if (p.alpha().is_zero()) {
    const Rational a = (p.beta() - Rational(1)) / Rational(2);
    for (std::size_t n = 1; n <= N; ++n) {
      tasks.emplace_back([=] { return from_report("dunkl", hahn_check(a, n)); });
    }
  }
  return tasks;
}

std::vector<Task> raising_tasks(const ParamPair& p, std::size_t N) {
  if (p.beta() <= Rational(1)) throw DomainError("raising suite needs beta > 1");
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= N; ++n) {
    tasks.emplace_back([=] { return from_report("raising", raising_check(p, n)); });
  }
  return tasks;
}

std::vector<Task> transform_tasks(const ParamPair& p, std::size_t N) {
  const JacobiParams jp = gegenbauer_params_for(p);
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= N; ++n) {
    tasks.emplace_back([=] { return from_report("transforms", identify_little(p, n)); });
    tasks.emplace_back([=] { return from_report("transforms", christoffel_geronimus_check(p, n)); });
    tasks.emplace_back([=] { return from_report("transforms", gegenbauer_dunkl_check(jp, n)); });
  }
  return tasks;
}

std::vector<Task> aw_tasks(const ParamPair& p, std::size_t N) {
  auto s = std::make_shared<aw::AWStructure>(aw::verify_relations(p, N));
  std::vector<Task> tasks;
  tasks.emplace_back([=] {
    return CheckLine{"aw", "YZ + ZY = 0", s->omega1 && s->omega1->is_zero(), false,
                     fmt::format("omega1 = {}", s->omega1 ? s->omega1->str() : "none"), {}};
  });
  tasks.emplace_back([=] {
    return CheckLine{"aw", "ZX + XZ - Y = beta I", s->omega2 && *s->omega2 == p.beta(), false,
                     fmt::format("omega2 = {}", s->omega2 ? s->omega2->str() : "none"), {}};
  });
  tasks.emplace_back([=] {
    const bool ok = s->omega3 && abs(*s->omega3) == p.alpha();
    const char* sign = !s->omega3 || s->omega3->is_zero() ? "0" : (s->omega3->sign() < 0 ? "-" : "+");
    return CheckLine{"aw", "XY + YX - Z = s I, |s| = alpha", ok, false,
                     fmt::format("s = {} (sign {})", s->omega3 ? s->omega3->str() : "none", sign), {}};
  });
  tasks.emplace_back([=] {
    return CheckLine{"aw", "Y^2 + Z^2 = I, central", s->casimir_is_identity, false,
                     fmt::format("truncation N = {}", N), {}};
  });
  for (std::size_t n = 0; n <= std::min<std::size_t>(N, 10); ++n) {
    tasks.emplace_back([=] { return from_report("aw", aw::x_diagonal_check(p, n)); });
  }
  return tasks;
}

std::vector<Task> prop2_tasks(const ParamPair& p, std::size_t N) {
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= N; ++n) {
    tasks.emplace_back([=] { return from_report("prop2", proposition2_check(p, n)); });
  }
  return tasks;
}

std::vector<Task> qlimit_tasks(const ParamPair& p, std::size_t N, const std::vector<double>& eps) {
  if (eps.size() != 2) throw DomainError("qlimit needs exactly two epsilon values");
  if (!(eps[0] > eps[1] && eps[1] > 0)) throw DomainError("qlimit epsilons must satisfy eps1 > eps2 > 0");
  const double expected = eps[0] / eps[1];
  auto judge = [expected](const std::string& check, double coarse, double fine) {
    const double ratio = coarse / fine;
    const bool ok = ratio >= 0.8 * expected && ratio <= 1.2 * expected;
    return CheckLine{"qlimit", check, ok, false,
                     fmt::format("err {:.3e} -> {:.3e}, ratio {:.3f} (expected {:.1f} +-20%)", coarse, fine, ratio,
                                 expected), {}};
  };
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= N; ++n) {
    tasks.emplace_back([=] {
      return judge(fmt::format("b_{}", n), qlimit_error(p, eps[0], n).b, qlimit_error(p, eps[1], n).b);
    });
    if (n >= 1) {
      tasks.emplace_back([=] {
        return judge(fmt::format("u_{}", n), *qlimit_error(p, eps[0], n).u, *qlimit_error(p, eps[1], n).u);
      });
    }
  }
  return tasks;
}

std::vector<Task> susy_tasks(const SuiteConfig& cfg) {
  const susy::SchrodingerParams a(cfg.a);
  const auto grid = std::make_shared<std::vector<double>>(susy::make_grid(cfg.points));
  const auto coarse = std::make_shared<std::vector<double>>(susy::make_grid(50));
  const ParamPair linked(Rational(0), Rational(2) * cfg.a + Rational(1));
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= cfg.levels; ++n) {
    tasks.emplace_back([=] { return from_numeric("susy", fmt::format("L1 psi_{} eigen", n), susy::L1_eigen_check(a, n, *grid)); });
    tasks.emplace_back([=] { return from_numeric("susy", fmt::format("H1 psi_{} eigen", n), susy::H1_eigen_check(a, n, *grid)); });
    tasks.emplace_back([=] { return from_numeric("susy", fmt::format("Darboux flip psi_{}", n), susy::darboux_flip(a, n, *grid)); });
    tasks.emplace_back([=] {
      const std::size_t nodes = susy::sign_changes(susy::sample_wavefunction(a, n, *grid).values);
      return CheckLine{"susy", fmt::format("nodes psi_{}", n), nodes == n, false, fmt::format("{} sign changes", nodes), {}};
    });
    tasks.emplace_back([=] {
      const Poly factor = susy::wavefunction_poly(a, n);
      return from_report("susy", compare_polys("psi factor = little -1 Jacobi (alpha=0)", linked.to_json(), n,
                                               factor.monic(), generate_monic(linked, n)));
    });
  }
  for (std::size_t k = 0; k <= 6; ++k) {
    tasks.emplace_back([=] {
      std::vector<double> coeffs(k + 1, 0.0);
      coeffs[k] = 1.0;
      return from_numeric("susy", fmt::format("L1^2 = H1 on Phi s^{}", k),
                          susy::square_root_check(a, susy::phi_times_poly(a, coeffs), *coarse));
    });
  }
  const std::vector<std::pair<std::string, Poly>> test_polys{
      {"1", Poly{Rational(1)}}, {"s", Poly::x()}, {"s^2 - 1/2", Poly{Rational(-1, 2), Rational(0), Rational(1)}}};
  for (const auto& [label, poly] : test_polys) {
    tasks.emplace_back([=] {
      return from_numeric("susy", fmt::format("H1 Phi p = Phi((a+1)^2 - S0) p, p = {}", label),
                          susy::conjugation_check(a, poly, *grid));
    });
  }
  tasks.emplace_back([=] {
    const auto r = susy::factorization_check(
        susy::well_superpotential(a), [a](double y) { return susy::potential(a, y); }, 0.0, *grid);
    const double worst = std::max({r.odd_part, r.even_part, r.factorized, r.refactorized});
    return CheckLine{"susy", "factorization chi = -(a+1/2)/cos y", r.holds, false,
                     fmt::format("worst={:.3e} tol={:.0e}", worst, r.tolerance), worst};
  });
  tasks.emplace_back([=] {
    const auto r = susy::commuting_pair_check(cfg.a, 24);
    CheckLine line = from_op_report("susy", "[L0,S0] = 0 and L0^2 - 4(1+a)L0 + 4S0 = 0", r.relation);
    line.pass = r.holds();
    if (!r.commute.holds) line.detail = "L0 and S0 do not commute";
    return line;
  });
  return tasks;
}

std::vector<Task> tasks_for(const std::string& name, const SuiteConfig& cfg) {
  if (name == "susy") return susy_tasks(cfg);
  const ParamPair p(cfg.alpha, cfg.beta);
  if (name == "orthogonality") return orthogonality_tasks(p, degree_or(cfg, 20));
  if (name == "eigen") return eigen_tasks(p, degree_or(cfg, 20));
  if (name == "explicit") return explicit_tasks(p, degree_or(cfg, 12));
  if (name == "dunkl") return dunkl_tasks(p, degree_or(cfg, 12));
  if (name == "raising") return raising_tasks(p, degree_or(cfg, 10));
  if (name == "transforms") return transform_tasks(p, degree_or(cfg, 12));
  if (name == "aw") return aw_tasks(p, degree_or(cfg, 24));
  if (name == "prop2") return prop2_tasks(p, degree_or(cfg, 10));
  if (name == "qlimit") return qlimit_tasks(p, degree_or(cfg, 10), cfg.epsilon_list);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthogonality", "eigen", "explicit", "dunkl",  "raising", "transforms",
                                              "aw",            "prop2", "qlimit",   "susy",   "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

std::vector<CheckLine> with_max_residual(std::vector<CheckLine> lines) {
  std::optional<double> worst;
  bool pass = true;
  for (const auto& l : lines) {
    if (!l.residual) continue;
    worst = std::max(worst.value_or(0.0), *l.residual);
    pass = pass && l.pass;
  }
  if (worst) lines.push_back({lines.front().suite, "max residual", pass, false, fmt::format("{:.3e}", *worst), worst});
  return lines;
}

}  // namespace

std::vector<CheckLine> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name != "all") return with_max_residual(run_tasks(tasks_for(name, cfg)));
  std::vector<CheckLine> all;
  for (const auto& suite : suite_names()) {
    if (suite == "all") continue;
    try {
      auto lines = with_max_residual(run_tasks(tasks_for(suite, cfg)));
      all.insert(all.end(), lines.begin(), lines.end());
    } catch (const DomainError& e) {
      all.push_back({suite, "suite", true, true, fmt::format("skipped: {}", e.what()), {}});
    }
  }
  return all;
}

}  // namespace minusone::cli
