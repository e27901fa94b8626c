// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "dunklcas/builders.hpp"
#include "dunklcas/commands.hpp"
#include "dunklcas/relations.hpp"
#include "dunklcas/states.hpp"
#include "support/random_expr.hpp"

using namespace dunklcas;
using dunklcas::testing::Rng;
using K = OperatorKind;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

OperatorElement b(K kind, std::size_t dims, std::size_t index = 0) {
  return build(OperatorName{kind, index}, dims);
}

// Collects failed checks of one criterion.
struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string &what) {
    if (!ok)
      failures.push_back(what);
  }
};

int cli(std::vector<std::string> args, std::string *out = nullptr) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  if (out)
    *out = o.str();
  return code;
}

std::string shell(const std::string &args) {
  std::string cmd = std::string(DUNKLCAS_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe)
    return {};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get()))
    out.append(buf.data(), n);
  return out;
}

int shell_status(const std::string &args) {
  std::string cmd = std::string(DUNKLCAS_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void registry_parametric(Criterion &c) {
  const std::vector<std::string> required = {
      "sl12",          "su11",          "osp12-grading", "sd2",
      "sd2-conserved", "casimir-sd2",   "gauge-sl12",    "conformal",
      "gauge-2d",      "k-reflection",  "cubic",         "hahn",
      "super-odd",     "super-evenodd", "super-even",    "super-casimir",
      "susy-defining", "susy-1d",       "susy-generic",  "susy-nd",
      "susy-k-invariance"};
  auto start = Clock::now();
  std::vector<RelationReport> reports = check_all();
  double total = since(start);
  std::set<std::string> seen;
  double heaviest = 0;
  for (const RelationReport &r : reports) {
    seen.insert(r.family);
    heaviest = std::max(heaviest, r.seconds);
    for (const IdentityResult &i : r.identities)
      c.expect(i.residual.is_zero() && i.residual_terms == 0,
               r.family + ": " + i.label + " leaves " + std::to_string(i.residual_terms) +
                   " terms");
  }
  for (const std::string &id : required)
    c.expect(seen.count(id) == 1, "family " + id + " missing");
  c.expect(total < 300, "registry took " + std::to_string(total) + "s");
  c.expect(heaviest < 60, "slowest family took " + std::to_string(heaviest) + "s");
  std::string out;
  c.expect(cli({"verify", "all", "--parametric"}, &out) == 0, "verify all --parametric failed");
}

void spectrum_reproduction(Criterion &c) {
  auto start = Clock::now();
  const Rational mu[] = {Rational(1, 3), Rational(1, 2)};
  auto rows = spectrum_table(2, mu, 6);
  c.expect(rows.size() == 7, "expected 7 rows");
  for (const SpectrumRow &row : rows) {
    c.expect(row.energy == Rational(row.level) + Rational(11, 6),
             "energy at N = " + std::to_string(row.level));
    c.expect(row.degeneracy == row.level + 1, "degeneracy at N = " + std::to_string(row.level));
  }
  OperatorElement h = b(K::Hamiltonian1D, 1, 1);
  Scalar m = Scalar::parameter(1, 0);
  for (unsigned n = 0; n <= 12; ++n)
    c.expect(eigencheck(h, fock({n})) == m + Scalar(1, Rational(2 * n + 1, 2)),
             "1D eigenvalue at n = " + std::to_string(n));
  c.expect(since(start) < 10, "spectrum took too long");
}

void admissibility(Criterion &c) {
  for (const Rational &mu : {Rational(-1, 4), Rational(0), Rational(1, 3)}) {
    auto coeffs = ladder_norm_coefficients(20, mu);
    c.expect(coeffs.size() == 20, "expected 20 coefficients");
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      c.expect(coeffs[k] > 0, "c_" + std::to_string(k + 1) + " <= 0 at mu = " + to_string(mu));
  }
  Scalar c1 = ladder_norm_coefficients(1)[0];
  c.expect(c1 == Scalar(1, 1) + Scalar::parameter(1, 0) * BaseNumber(2), "c_1 != 1 + 2mu");
  c.expect(ladder_norm_coefficients(1, Rational(-3, 4))[0] < 0, "c_1 not negative at -3/4");
}

void oracle_equivalence(Criterion &c) {
  auto start = Clock::now();
  Rng rng(4242);
  for (int t = 0; t < 200; ++t) {
    std::size_t vars = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
    OperatorElement a = testing::operator_element(rng, vars, vars);
    OperatorElement e = testing::operator_element(rng, vars, vars);
    GaussState s(testing::laurent(rng, vars, vars));
    c.expect(apply(multiply(a, e), s, PolePolicy::allow) ==
                 apply(a, apply(e, s, PolePolicy::allow), PolePolicy::allow),
             "action mismatch in trial " + std::to_string(t));
  }
  for (int t = 0; t < 200; ++t) {
    std::size_t vars = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
    OperatorElement a = testing::operator_element(rng, vars, vars);
    OperatorElement e = testing::operator_element(rng, vars, vars);
    OperatorElement f = testing::operator_element(rng, vars, vars);
    c.expect(multiply(multiply(a, e), f) == multiply(a, multiply(e, f)),
             "associativity fails in trial " + std::to_string(t));
  }
  c.expect(since(start) < 60, "oracle checks took too long");
}

void negative_controls(Criterion &c) {
  CheckOptions perturbed;
  perturbed.perturb = true;
  for (const char *id : {"hahn", "sd2"}) {
    RelationReport r = check(id, perturbed);
    std::size_t terms = 0;
    for (const IdentityResult &i : r.identities)
      terms += i.residual_terms;
    c.expect(!r.passed(), std::string(id) + " perturbed check passed");
    c.expect(terms > 0, std::string(id) + " perturbed residual is zero");
  }
  c.expect(cli({"verify", "hahn", "--perturb"}) == 1, "perturbed verify did not exit 1");
}

void susy_structure(Criterion &c) {
  auto start = Clock::now();
  OperatorElement q = b(K::SusyCharge1D, 1, 1), h = b(K::SusyH1D, 1, 1);
  c.expect(adjoint(q) == q, "Q is not hermitian");
  c.expect(h == q * q, "H != Q^2 in 1D");
  SusyPair three = build_susy_nd(3);
  OperatorElement squares(3, 3);
  for (std::size_t i = 1; i <= 3; ++i)
    squares += b(K::SusyCharge1D, 3, i) * b(K::SusyCharge1D, 3, i);
  OperatorElement residual = three.charge * three.charge - squares;
  c.expect(residual.is_zero(), "n = 3 cross terms leave " +
                                   std::to_string(residual.term_count()) + " terms");
  c.expect(since(start) < 30, "SUSY checks took too long");
}

void undeformed_limit(Criterion &c) {
  CheckOptions o;
  o.mode = MuMode::numeric;
  o.mu = {0, 0};
  c.expect(check("sd2", o).passed(), "sd2 at mu = (0,0) fails");
  const Rational zero[] = {Rational(0), Rational(0)};
  OperatorElement jp = substitute_params(b(K::JPlus, 2), zero);
  OperatorElement jm = substitute_params(b(K::JMinus, 2), zero);
  OperatorElement j0 = substitute_params(b(K::JZero, 2), zero);
  c.expect(commutator(jp, jm) == j0, "[J+,J-] != J0 at mu = 0");
}

void cli_contract(Criterion &c) {
  Rng rng(8080);
  for (int t = 0; t < 100; ++t) {
    Expr ast = testing::random_expr(rng, 3);
    OperatorElement value = evaluate(ast, 2);
    c.expect(evaluate(parse(value.str(), 2), 2) == value,
             "round trip fails for " + render(ast));
  }
  for (const char *args : {"verify all --format json", "verify all --mu 1/3,1/2",
                           "spectrum --dims 2 --mu 1/3,1/2 --levels 6 --format json",
                           "nf \"comm(K-,K+)\"", "list-relations"}) {
    std::string first = shell(args);
    c.expect(!first.empty() && first == shell(args), std::string("output differs: ") + args);
  }
  const std::pair<const char *, int> codes[] = {
      {"verify all", 0},
      {"verify hahn --parametric", 0},
      {"verify all --mu 1/3,1/2", 0},
      {"nf \"comm(d1,x1)\"", 0},
      {"verify hahn --perturb", 1},
      {"verify sd2 --perturb", 1},
      {"verify no-such-family", 2},
      {"nf \"x1 +\"", 2},
      {"bogus", 2},
  };
  for (const auto &[args, expected] : codes)
    c.expect(shell_status(args) == expected,
             std::string("exit code of '") + args + "' is not " + std::to_string(expected));
}

} // namespace

int main() {
  const std::pair<const char *, std::function<void(Criterion &)>> criteria[] = {
      {"1 parametric registry verification", registry_parametric},
      {"2 spectrum reproduction", spectrum_reproduction},
      {"3 admissibility via ladder norms", admissibility},
      {"4 oracle equivalence", oracle_equivalence},
      {"5 negative controls", negative_controls},
      {"6 SUSY structure", susy_structure},
      {"7 undeformed limit", undeformed_limit},
      {"8 CLI contract", cli_contract},
  };
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    Criterion c;
    auto start = Clock::now();
    try {
      run(c);
    } catch (const std::exception &e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2fs", since(start));
    std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << name << " (" << elapsed << ")\n";
    for (const std::string &f : c.failures)
      std::cout << "     " << f << "\n";
    failed += !c.failures.empty();
  }
  if (failed)
    std::cout << "FAILED: " << failed << " of " << std::size(criteria) << " criteria\n";
  else
    std::cout << "PASSED: all " << std::size(criteria) << " criteria\n";
  return failed ? 1 : 0;
}
