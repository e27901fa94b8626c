#include "dunklcas/relations.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "dunklcas/builders.hpp"

namespace dunklcas {

namespace {

using K = OperatorKind;

struct Identity {
  std::string label;
  OperatorElement lhs;
  OperatorElement rhs;
};

BaseNumber q(long num, long den = 1) { return BaseNumber(Rational(num, den)); }

// Operators of one dims-variable realization, specialized to the numeric mu
// values when requested.
class Realization {
public:
  Realization(const CheckOptions &options, std::size_t dims) : dims_(dims) {
    std::size_t k = std::min(options.mu.size(), dims);
    mu_.assign(options.mu.begin(), options.mu.begin() + static_cast<std::ptrdiff_t>(k));
  }

  std::size_t dims() const { return dims_; }

  OperatorElement op(K kind, std::size_t index = 0) const {
    OperatorElement e = build(OperatorName{kind, index}, dims_);
    return mu_.empty() ? e : specialize_params(e, mu_);
  }
  OperatorElement r(std::size_t var) const { return op(K::Reflection, var); }
  OperatorElement one() const { return OperatorElement(dims_, Scalar(dims_, 1)); }
  OperatorElement zero() const { return OperatorElement(dims_, dims_); }
  Scalar mu(std::size_t var) const { return Scalar::parameter(dims_, var - 1); }

  OperatorElement residual(const Identity &id) const {
    OperatorElement diff = id.lhs - id.rhs;
    return mu_.empty() ? diff : specialize_params(diff, mu_);
  }

private:
  std::size_t dims_;
  std::vector<Rational> mu_;
};

using Identities = std::vector<std::pair<const Realization *, Identity>>;

class Collector {
public:
  explicit Collector(Identities &out) : out_(out) {}
  void add(const Realization &ctx, std::string label, OperatorElement lhs, OperatorElement rhs) {
    out_.emplace_back(&ctx, Identity{std::move(label), std::move(lhs), std::move(rhs)});
  }

private:
  Identities &out_;
};

std::string idx(const char *pattern, std::size_t i) {
  std::string s = pattern;
  for (std::size_t pos; (pos = s.find('#')) != std::string::npos;)
    s.replace(pos, 1, std::to_string(i));
  return s;
}

// mu1 R1 + mu2 R2
OperatorElement reflection_sum(const Realization &ctx) {
  return ctx.r(1) * ctx.mu(1) + ctx.r(2) * ctx.mu(2);
}

void sl12_identities(Collector &c, const Realization &ctx, K plus, K minus, K zero,
                     const char *tag) {
  for (std::size_t i = 1; i <= 2; ++i) {
    OperatorElement ap = ctx.op(plus, i), am = ctx.op(minus, i), a0 = ctx.op(zero, i);
    OperatorElement r = ctx.r(i);
    std::string t = tag;
    c.add(ctx, idx("[A0,A+] = A+ (#)", i) + t, commutator(a0, ap), ap);
    c.add(ctx, idx("[A0,A-] = -A- (#)", i) + t, commutator(a0, am), -am);
    c.add(ctx, idx("{A+,A-} = 2 A0 (#)", i) + t, anticommutator(ap, am), a0 * q(2));
    c.add(ctx, idx("{A+,R#} = 0", i) + t, anticommutator(ap, r), ctx.zero());
    c.add(ctx, idx("{A-,R#} = 0", i) + t, anticommutator(am, r), ctx.zero());
    c.add(ctx, idx("[A0,R#] = 0", i) + t, commutator(a0, r), ctx.zero());
  }
}

void family_sl12(Collector &c, const Realization &ctx, bool) {
  sl12_identities(c, ctx, K::APlus, K::AMinus, K::AZero, "");
}

void family_su11(Collector &c, const Realization &ctx, bool) {
  for (std::size_t i = 1; i <= 2; ++i) {
    OperatorElement bp = ctx.op(K::BPlus, i), bm = ctx.op(K::BMinus, i), a0 = ctx.op(K::AZero, i);
    c.add(ctx, idx("[B-,B+] = A0 (#)", i), commutator(bm, bp), a0);
    c.add(ctx, idx("[A0,B+] = 2 B+ (#)", i), commutator(a0, bp), bp * q(2));
    c.add(ctx, idx("[A0,B-] = -2 B- (#)", i), commutator(a0, bm), bm * q(-2));
  }
}

void family_osp12_grading(Collector &c, const Realization &ctx, bool) {
  for (std::size_t i = 1; i <= 2; ++i) {
    OperatorElement r = ctx.r(i);
    c.add(ctx, idx("[A0,R#] = 0", i), commutator(ctx.op(K::AZero, i), r), ctx.zero());
    c.add(ctx, idx("[B+,R#] = 0", i), commutator(ctx.op(K::BPlus, i), r), ctx.zero());
    c.add(ctx, idx("[B-,R#] = 0", i), commutator(ctx.op(K::BMinus, i), r), ctx.zero());
    c.add(ctx, idx("{A+,R#} = 0", i), anticommutator(ctx.op(K::APlus, i), r), ctx.zero());
    c.add(ctx, idx("{A-,R#} = 0", i), anticommutator(ctx.op(K::AMinus, i), r), ctx.zero());
  }
}

void family_sd2(Collector &c, const Realization &ctx, bool perturb) {
  OperatorElement jp = ctx.op(K::JPlus), jm = ctx.op(K::JMinus), j0 = ctx.op(K::JZero);
  OperatorElement h = ctx.op(K::Hamiltonian2D);
  c.add(ctx, "[J0,J+] = 2 J+", commutator(j0, jp), jp * q(2));
  c.add(ctx, "[J0,J-] = -2 J-", commutator(j0, jm), jm * q(-2));
  for (std::size_t i = 1; i <= 2; ++i) {
    c.add(ctx, idx("{J+,R#} = 0", i), anticommutator(jp, ctx.r(i)), ctx.zero());
    c.add(ctx, idx("{J-,R#} = 0", i), anticommutator(jm, ctx.r(i)), ctx.zero());
    c.add(ctx, idx("[J0,R#] = 0", i), commutator(j0, ctx.r(i)), ctx.zero());
    c.add(ctx, idx("R#^2 = 1", i), ctx.r(i) * ctx.r(i), ctx.one());
  }
  OperatorElement diff = ctx.r(1) * ctx.mu(1) - ctx.r(2) * ctx.mu(2);
  if (perturb)
    diff = reflection_sum(ctx);
  c.add(ctx, "[J+,J-] = J0 + J0(mu1 R1 + mu2 R2) - H(mu1 R1 - mu2 R2)", commutator(jp, jm),
        j0 + j0 * reflection_sum(ctx) - h * diff);
}

void family_sd2_conserved(Collector &c, const Realization &ctx, bool) {
  OperatorElement h = ctx.op(K::Hamiltonian2D);
  c.add(ctx, "[H,J+] = 0", commutator(h, ctx.op(K::JPlus)), ctx.zero());
  c.add(ctx, "[H,J-] = 0", commutator(h, ctx.op(K::JMinus)), ctx.zero());
  c.add(ctx, "[H,J0] = 0", commutator(h, ctx.op(K::JZero)), ctx.zero());
  c.add(ctx, "[H,R1] = 0", commutator(h, ctx.r(1)), ctx.zero());
  c.add(ctx, "[H,R2] = 0", commutator(h, ctx.r(2)), ctx.zero());
}

void family_casimir_sd2(Collector &c, const Realization &ctx, bool) {
  OperatorElement cas = ctx.op(K::CasimirSD), h = ctx.op(K::Hamiltonian2D);
  OperatorElement p = ctx.op(K::PParity);
  c.add(ctx, "C = H^2 - 1", cas, h * h - ctx.one());
  const std::pair<const char *, OperatorElement> gens[] = {
      {"J+", ctx.op(K::JPlus)}, {"J-", ctx.op(K::JMinus)}, {"J0", ctx.op(K::JZero)},
      {"R1", ctx.r(1)},         {"R2", ctx.r(2)},
  };
  for (const auto &[name, g] : gens)
    c.add(ctx, std::string("[C,") + name + "] = 0", commutator(cas, g), ctx.zero());
  for (const auto &[name, g] : gens)
    c.add(ctx, std::string("[P,") + name + "] = 0", commutator(p, g), ctx.zero());
  c.add(ctx, "[P,H] = 0", commutator(p, h), ctx.zero());
}

void family_gauge_sl12(Collector &c, const Realization &ctx, bool) {
  sl12_identities(c, ctx, K::GaugedAPlus, K::GaugedAMinus, K::GaugedH, " (gauged)");
}

void family_conformal(Collector &c, const Realization &ctx, bool) {
  const BaseNumber i_unit = BaseNumber::imaginary_unit();
  for (std::size_t i = 1; i <= 2; ++i) {
    OperatorElement qc = ctx.op(K::ConformalQ, i), sc = ctx.op(K::ConformalS, i);
    OperatorElement hc = ctx.op(K::ConformalH, i), kc = ctx.op(K::ConformalK, i);
    OperatorElement dc = ctx.op(K::ConformalD, i), r = ctx.r(i);
    OperatorElement ap = ctx.op(K::GaugedAPlus, i), am = ctx.op(K::GaugedAMinus, i);
    c.add(ctx, idx("[Hc#,Dc#] = i Hc#", i), commutator(hc, dc), hc * i_unit);
    c.add(ctx, idx("[Hc#,Kc#] = 2i Dc#", i), commutator(hc, kc), dc * (i_unit * q(2)));
    c.add(ctx, idx("[Dc#,Kc#] = i Kc#", i), commutator(dc, kc), kc * i_unit);
    c.add(ctx, idx("{Qc#,R#} = 0", i), anticommutator(qc, r), ctx.zero());
    c.add(ctx, idx("{Sc#,R#} = 0", i), anticommutator(sc, r), ctx.zero());
    c.add(ctx, idx("[Hc#,R#] = 0", i), commutator(hc, r), ctx.zero());
    c.add(ctx, idx("[Kc#,R#] = 0", i), commutator(kc, r), ctx.zero());
    c.add(ctx, idx("[Dc#,R#] = 0", i), commutator(dc, r), ctx.zero());
    c.add(ctx, idx("Ht# = Hc# + Kc#", i), ctx.op(K::GaugedH, i), hc + kc);
    c.add(ctx, idx("Hc# = Qc#^2", i), hc, qc * qc);
    c.add(ctx, idx("Kc# = Sc#^2", i), kc, sc * sc);
    c.add(ctx, idx("Dc# = -{Qc#,Sc#}/2", i), dc, anticommutator(qc, sc) * q(-1, 2));
    c.add(ctx, idx("Qc# = (At#- - At#+) R# / 2", i), qc, (am - ap) * r * q(1, 2));
    // 1/(2i) = -i/2
    c.add(ctx, idx("Sc# = R# (At#+ + At#-) / 2i", i), sc, r * (ap + am) * (i_unit * q(-1, 2)));
  }
}

void family_gauge_2d(Collector &c, const Realization &ctx, bool) {
  c.add(ctx, "Htilde = Ht1 + Ht2", ctx.op(K::GaugedH2D),
        ctx.op(K::GaugedH, 1) + ctx.op(K::GaugedH, 2));
}

void family_k_reflection(Collector &c, const Realization &ctx, bool) {
  for (std::size_t i = 1; i <= 2; ++i) {
    c.add(ctx, idx("[K+,R#] = 0", i), commutator(ctx.op(K::KPlus), ctx.r(i)), ctx.zero());
    c.add(ctx, idx("[K-,R#] = 0", i), commutator(ctx.op(K::KMinus), ctx.r(i)), ctx.zero());
  }
}

// gamma1 = 3 - H^2 - 2mu1^2 - 2mu2^2, gamma2 = 2mu1^2 - 2mu2^2
OperatorElement gamma1(const Realization &ctx, const OperatorElement &h) {
  Scalar m = ctx.mu(1) * ctx.mu(1) * q(2) + ctx.mu(2) * ctx.mu(2) * q(2);
  return ctx.one() * q(3) - h * h - ctx.one() * m;
}

OperatorElement gamma2(const Realization &ctx) {
  return ctx.one() * (ctx.mu(1) * ctx.mu(1) * q(2) - ctx.mu(2) * ctx.mu(2) * q(2));
}

// mu2 R2 - mu1 R1
OperatorElement reflection_skew(const Realization &ctx) {
  return ctx.r(2) * ctx.mu(2) - ctx.r(1) * ctx.mu(1);
}

void family_cubic(Collector &c, const Realization &ctx, bool) {
  OperatorElement kp = ctx.op(K::KPlus), km = ctx.op(K::KMinus), j0 = ctx.op(K::JZero);
  OperatorElement h = ctx.op(K::Hamiltonian2D);
  c.add(ctx, "[J0,K+] = 4 K+", commutator(j0, kp), kp * q(4));
  c.add(ctx, "[J0,K-] = -4 K-", commutator(j0, km), km * q(-4));
  OperatorElement rhs = j0 * j0 * j0 + j0 * (gamma1(ctx, h) + reflection_sum(ctx) * q(2)) +
                        h * (gamma2(ctx) + reflection_skew(ctx) * q(2));
  c.add(ctx, "[K-,K+] = J0^3 + J0(g1 + 2mu1 R1 + 2mu2 R2) + H(g2 + 2mu2 R2 - 2mu1 R1)",
        commutator(km, kp), rhs);
}

void family_hahn(Collector &c, const Realization &ctx, bool perturb) {
  OperatorElement k0 = ctx.op(K::K0), k1 = ctx.op(K::K1), k2 = ctx.op(K::K2);
  OperatorElement h = ctx.op(K::Hamiltonian2D);
  c.add(ctx, "[K0,K1] = K2", commutator(k0, k1), k2);
  OperatorElement rhs = anticommutator(k0, k1) +
                        k0 * (gamma1(ctx, h) + reflection_sum(ctx) * q(2)) * q(1, 8) +
                        h * (gamma2(ctx) + reflection_skew(ctx) * q(2)) * q(1, 64);
  c.add(ctx, "[K1,K2] = {K0,K1} + K0(g1 + 2mu1 R1 + 2mu2 R2)/8 + H(g2 + 2mu2 R2 - 2mu1 R1)/64",
        commutator(k1, k2), rhs);
  c.add(ctx, perturb ? "[K2,K0] = K0^2 - K1/3 (perturbed)" : "[K2,K0] = K0^2 - K1/4",
        commutator(k2, k0), k0 * k0 - k1 * (perturb ? q(1, 3) : q(1, 4)));
}

void family_super_odd(Collector &c, const Realization &ctx, bool) {
  OperatorElement fp = ctx.op(K::FPlus), fm = ctx.op(K::FMinus);
  OperatorElement e0 = ctx.op(K::E0), e1 = ctx.op(K::E1), e2 = ctx.op(K::E2);
  OperatorElement h = ctx.op(K::Hamiltonian2D);
  OperatorElement e0sq = e0 * e0;
  c.add(ctx, "{F+,F+} = 8E1 + 16E2 - 32E0^2", anticommutator(fp, fp),
        e1 * q(8) + e2 * q(16) - e0sq * q(32));
  c.add(ctx, "{F-,F-} = 8E1 - 16E2 - 32E0^2", anticommutator(fm, fm),
        e1 * q(8) - e2 * q(16) - e0sq * q(32));
  OperatorElement delta = (h * h - ctx.one()) * q(1, 2);
  OperatorElement rhs = e0sq * q(-32) - reflection_sum(ctx) -
                        ctx.r(1) * ctx.r(2) * (ctx.mu(1) * ctx.mu(2) * q(2)) + delta;
  c.add(ctx, "{F+,F-} = -32E0^2 - mu1 R1 - mu2 R2 - 2mu1 mu2 R1 R2 + (H^2 - 1)/2",
        anticommutator(fp, fm), rhs);
  for (std::size_t i = 1; i <= 2; ++i) {
    c.add(ctx, idx("[E0,R#] = 0", i), commutator(e0, ctx.r(i)), ctx.zero());
    c.add(ctx, idx("[E1,R#] = 0", i), commutator(e1, ctx.r(i)), ctx.zero());
    c.add(ctx, idx("[E2,R#] = 0", i), commutator(e2, ctx.r(i)), ctx.zero());
    c.add(ctx, idx("{F+,R#} = 0", i), anticommutator(fp, ctx.r(i)), ctx.zero());
    c.add(ctx, idx("{F-,R#} = 0", i), anticommutator(fm, ctx.r(i)), ctx.zero());
  }
}

void family_super_evenodd(Collector &c, const Realization &ctx, bool) {
  OperatorElement fp = ctx.op(K::FPlus), fm = ctx.op(K::FMinus);
  OperatorElement e0 = ctx.op(K::E0), e1 = ctx.op(K::E1), e2 = ctx.op(K::E2);
  OperatorElement m = reflection_sum(ctx);
  c.add(ctx, "[E0,F+] = F+/4", commutator(e0, fp), fp * q(1, 4));
  c.add(ctx, "[E0,F-] = -F-/4", commutator(e0, fm), fm * q(-1, 4));
  c.add(ctx, "[E1,F+] = {E0,F+} - {E0,F-} - F-(mu1 R1 + mu2 R2)/4", commutator(e1, fp),
        anticommutator(e0, fp) - anticommutator(e0, fm) - fm * m * q(1, 4));
  // The anticommutator pair keeps its order for F-; the swapped pair fails.
  c.add(ctx, "[E1,F-] = {E0,F+} - {E0,F-} - F+(mu1 R1 + mu2 R2)/4", commutator(e1, fm),
        anticommutator(e0, fp) - anticommutator(e0, fm) - fp * m * q(1, 4));
  c.add(ctx, "[E2,F+] = {E0,F-}/2 + F-(mu1 R1 + mu2 R2)/8", commutator(e2, fp),
        anticommutator(e0, fm) * q(1, 2) + fm * m * q(1, 8));
  c.add(ctx, "[E2,F-] = {E0,F+}/2 - F+(mu1 R1 + mu2 R2)/8", commutator(e2, fm),
        anticommutator(e0, fp) * q(1, 2) - fp * m * q(1, 8));
}

void family_super_even(Collector &c, const Realization &ctx, bool) {
  OperatorElement e0 = ctx.op(K::E0), e1 = ctx.op(K::E1), e2 = ctx.op(K::E2);
  OperatorElement h = ctx.op(K::Hamiltonian2D);
  // omega1 = 3/2 - H^2/2 - mu1^2 - mu2^2, omega2 = mu1^2 - mu2^2
  OperatorElement omega1 = ctx.one() * q(3, 2) - h * h * q(1, 2) -
                           ctx.one() * (ctx.mu(1) * ctx.mu(1) + ctx.mu(2) * ctx.mu(2));
  OperatorElement omega2 = ctx.one() * (ctx.mu(1) * ctx.mu(1) - ctx.mu(2) * ctx.mu(2));
  c.add(ctx, "[E0,E1] = E2", commutator(e0, e1), e2);
  c.add(ctx,
        "[E1,E2] = {E0,E1} + E0(w1 + mu1 R1 + mu2 R2)/4 + H(w2 + mu2 R2 - mu1 R1)/32",
        commutator(e1, e2),
        anticommutator(e0, e1) + e0 * (omega1 + reflection_sum(ctx)) * q(1, 4) +
            h * (omega2 + reflection_skew(ctx)) * q(1, 32));
  c.add(ctx, "[E2,E0] = E0^2 - E1/4", commutator(e2, e0), e0 * e0 - e1 * q(1, 4));
}

void family_super_casimir(Collector &c, const Realization &ctx, bool) {
  OperatorElement cas = ctx.op(K::CasimirSD);
  const std::pair<const char *, K> gens[] = {
      {"E0", K::E0}, {"E1", K::E1}, {"E2", K::E2}, {"F+", K::FPlus}, {"F-", K::FMinus}};
  for (const auto &[name, kind] : gens)
    c.add(ctx, std::string("[C,") + name + "] = 0", commutator(cas, ctx.op(kind)), ctx.zero());
}

void family_susy_defining(Collector &c, const Realization &one_d, const Realization &two_d) {
  auto add_model = [&c](const Realization &ctx, const OperatorElement &qq,
                        const OperatorElement &h, const std::string &tag) {
    OperatorElement qd = adjoint(qq);
    c.add(ctx, "H = {Q,Q^dagger}/2" + tag, h, anticommutator(qq, qd) * q(1, 2));
    c.add(ctx, "[Q,H] = 0" + tag, commutator(qq, h), ctx.zero());
    c.add(ctx, "[Q^dagger,H] = 0" + tag, commutator(qd, h), ctx.zero());
  };
  add_model(one_d, one_d.op(K::SusyCharge1D, 1), one_d.op(K::SusyH1D, 1), " (1D)");
  add_model(two_d, two_d.op(K::SusyChargeND), two_d.op(K::SusyHND), " (2D)");
}

void family_susy_1d(Collector &c, const Realization &ctx) {
  OperatorElement qq = ctx.op(K::SusyCharge1D, 1), h = ctx.op(K::SusyH1D, 1);
  OperatorElement x = ctx.op(K::Coordinate, 1), d = ctx.op(K::Derivative, 1), r = ctx.r(1);
  OperatorElement explicit_q =
      (d * r + x - OperatorElement::coordinate(1, 1, 0, -1) * ctx.mu(1)) *
      BaseNumber::inv_sqrt2();
  c.add(ctx, "Q = (d R + x - mu/x)/sqrt2", qq, explicit_q);
  c.add(ctx, "H = Q^2", h, qq * qq);
  c.add(ctx, "Q^dagger = Q", adjoint(qq), qq);
  c.add(ctx, "H = Ht - R/2 - mu", h,
        ctx.op(K::GaugedH, 1) - r * q(1, 2) - ctx.one() * ctx.mu(1));
}

void family_susy_generic(Collector &c, const Realization &ctx) {
  // one variable, one parameter
  auto laurent = [](std::initializer_list<std::pair<int, Scalar>> terms) {
    LaurentPolynomial p(1, 1);
    for (const auto &[e, s] : terms)
      p.add_term(Exponents{e}, s);
    return p;
  };
  Scalar one(1, 1), two(1, 2), mu = Scalar::parameter(1, 0);
  struct Sample {
    const char *label;
    LaurentPolynomial v, w;
  };
  const Sample samples[] = {
      {"V=0, W=0", laurent({}), laurent({})},
      {"V=x^2, W=x", laurent({{2, one}}), laurent({{1, one}})},
      {"V=1+x^-2, W=x^3-2/x", laurent({{0, one}, {-2, one}}), laurent({{3, one}, {-1, -two}})},
      {"V=mu, W=mu x - 1/x", laurent({{0, mu}}), laurent({{1, mu}, {-1, -one}})},
      {"V=0, W=x - mu/x", laurent({}), laurent({{1, one}, {-1, -mu}})},
  };
  for (const auto &s : samples) {
    SuperpotentialPair vw(s.v, s.w);
    OperatorElement qq = build_generic_supercharge(vw);
    OperatorElement h = generic_susy_hamiltonian(vw);
    c.add(ctx, std::string("Q^2 = (-d^2 + V^2 + W^2 + V' - W'R)/2 [") + s.label + "]", qq * qq,
          h);
    c.add(ctx, std::string("Q^dagger = Q [") + s.label + "]", adjoint(qq), qq);
  }
}

void family_susy_nd(Collector &c, const Realization &ctx) {
  const std::size_t n = ctx.dims();
  std::string tag = " (n=" + std::to_string(n) + ")";
  OperatorElement qq = ctx.op(K::SusyChargeND), h = ctx.op(K::SusyHND);
  OperatorElement sum_sq = ctx.zero(), sum_h = ctx.zero();
  for (std::size_t i = 1; i <= n; ++i) {
    OperatorElement qi = ctx.op(K::SusyCharge1D, i);
    sum_sq += qi * qi;
    sum_h += ctx.op(K::SusyH1D, i);
  }
  c.add(ctx, "Q^2 = sum_i Q_i^2" + tag, qq * qq, sum_sq);
  c.add(ctx, "H = Q^2" + tag, h, qq * qq);
  c.add(ctx, "H = sum_i H_i" + tag, h, sum_h);
  c.add(ctx, "Q^dagger = Q" + tag, adjoint(qq), qq);
}

void family_susy_k_invariance(Collector &c, const Realization &ctx) {
  OperatorElement h = ctx.op(K::SusyHND);
  OperatorElement j0 = ctx.op(K::GaugedJZero);
  c.add(ctx, "[Kt+,H_susy] = 0", commutator(ctx.op(K::GaugedKPlus), h), ctx.zero());
  c.add(ctx, "[Kt-,H_susy] = 0", commutator(ctx.op(K::GaugedKMinus), h), ctx.zero());
  c.add(ctx, "[Jt0^2,H_susy] = 0", commutator(j0 * j0, h), ctx.zero());
  c.add(ctx, "H_susy = Htilde - (R1 + R2)/2 - mu1 - mu2", h,
        ctx.op(K::GaugedH2D) - (ctx.r(1) + ctx.r(2)) * q(1, 2) -
            ctx.one() * (ctx.mu(1) + ctx.mu(2)));
}

struct FamilyDef {
  FamilyInfo info;
  std::function<void(Collector &, const CheckOptions &, std::vector<Realization> &)> run;
};

// Plane families share one signature.
FamilyDef plane(const char *id, const char *summary,
                void (*fn)(Collector &, const Realization &, bool), bool perturbable = false) {
  return FamilyDef{{id, summary, perturbable},
                   [fn](Collector &c, const CheckOptions &o, std::vector<Realization> &ctxs) {
                     ctxs.emplace_back(o, 2);
                     fn(c, ctxs.back(), o.perturb);
                   }};
}

const std::vector<FamilyDef> &registry() {
  static const std::vector<FamilyDef> defs = [] {
    std::vector<FamilyDef> d;
    d.push_back(plane("sl12", "sl_{-1}(2) relations of the parabose ladder operators",
                      family_sl12));
    d.push_back(plane("su11", "su(1,1) relations of the bilinears B+- with A0", family_su11));
    d.push_back(plane("osp12-grading",
                      "even generators commute, odd generators anticommute with R_i",
                      family_osp12_grading));
    d.push_back(plane("sd2", "Schwinger-Dunkl algebra sd(2)", family_sd2, true));
    d.push_back(plane("sd2-conserved", "J+-, J0 and R_i commute with H", family_sd2_conserved));
    d.push_back(plane("casimir-sd2", "C = H^2 - 1; C and P = R1 R2 are central",
                      family_casimir_sd2));
    d.push_back(plane("gauge-sl12", "gauge-rotated ladder operators satisfy sl_{-1}(2)",
                      family_gauge_sl12));
    d.push_back(plane("conformal", "osp(1|2) conformal realization and su(1,1) commutators",
                      family_conformal));
    d.push_back(plane("gauge-2d", "gauge-rotated 2D Hamiltonian", family_gauge_2d));
    d.push_back(plane("k-reflection", "K+- commute with the reflections", family_k_reflection));
    d.push_back(plane("cubic", "cubic algebra of K+- and J0", family_cubic));
    d.push_back(plane("hahn", "Hahn algebra with reflections for K0, K1, K2", family_hahn, true));
    d.push_back(plane("super-odd", "odd anticommutators and grading of the Hahn superalgebra",
                      family_super_odd));
    d.push_back(plane("super-evenodd", "even/odd commutators of the Hahn superalgebra",
                      family_super_evenodd));
    d.push_back(plane("super-even", "Hahn relations of E0, E1, E2", family_super_even));
    d.push_back(plane("super-casimir", "C is central in the Hahn superalgebra",
                      family_super_casimir));
    d.push_back(FamilyDef{
        {"susy-defining", "H = {Q,Q^dagger}/2 and [Q,H] = 0 for the 1D and 2D models", false},
        [](Collector &c, const CheckOptions &o, std::vector<Realization> &ctxs) {
          ctxs.emplace_back(o, 1);
          ctxs.emplace_back(o, 2);
          family_susy_defining(c, ctxs[0], ctxs[1]);
        }});
    d.push_back(FamilyDef{
        {"susy-1d", "1D supersymmetric Dunkl oscillator: H = Q^2, Q hermitian", false},
        [](Collector &c, const CheckOptions &o, std::vector<Realization> &ctxs) {
          ctxs.emplace_back(o, 1);
          family_susy_1d(c, ctxs.back());
        }});
    d.push_back(FamilyDef{
        {"susy-generic", "Q^2 for sampled even V and odd W", false},
        [](Collector &c, const CheckOptions &o, std::vector<Realization> &ctxs) {
          ctxs.emplace_back(o, 1);
          family_susy_generic(c, ctxs.back());
        }});
    d.push_back(FamilyDef{
        {"susy-nd", "n-dimensional supercharge squares to sum_i Q_i^2, n = 1, 2, 3", false},
        [](Collector &c, const CheckOptions &o, std::vector<Realization> &ctxs) {
          ctxs.reserve(3);
          for (std::size_t n = 1; n <= 3; ++n) {
            ctxs.emplace_back(o, n);
            family_susy_nd(c, ctxs.back());
          }
        }});
    d.push_back(FamilyDef{
        {"susy-k-invariance", "K+- and J0^2 commute with the 2D supersymmetric Hamiltonian",
         false},
        [](Collector &c, const CheckOptions &o, std::vector<Realization> &ctxs) {
          ctxs.emplace_back(o, 2);
          family_susy_k_invariance(c, ctxs.back());
        }});
    return d;
  }();
  return defs;
}

void validate(const CheckOptions &options) {
  if (options.mode == MuMode::numeric && options.mu.empty())
    throw std::invalid_argument("numeric mode needs mu values");
  // two values fix the plane; a third reaches the n = 3 supercharge
  if (options.mode == MuMode::numeric && options.mu.size() > 3)
    throw ArityMismatch(3, options.mu.size());
  if (options.mode == MuMode::parametric && !options.mu.empty())
    throw std::invalid_argument("parametric mode takes no mu values");
}

RelationReport run_family(const FamilyDef &def, const CheckOptions &options) {
  auto start = std::chrono::steady_clock::now();
  Identities identities;
  Collector collector(identities);
  std::vector<Realization> contexts;
  contexts.reserve(4); // Collector keeps pointers into this vector
  def.run(collector, options, contexts);

  RelationReport report{def.info.id, options.mode, {}, 0};
  for (const auto &[ctx, id] : identities) {
    OperatorElement residual = ctx->residual(id);
    std::size_t terms = residual.term_count();
    report.identities.push_back({id.label, std::move(residual), terms == 0, terms});
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace

bool RelationReport::passed() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityResult &r) { return r.passed; });
}

const std::vector<FamilyInfo> &families() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto &d : registry())
      out.push_back(d.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> list_families() {
  std::vector<std::string> ids;
  for (const auto &f : families())
    ids.push_back(f.id);
  return ids;
}

RelationReport check(std::string_view id, const CheckOptions &options) {
  validate(options);
  for (const auto &def : registry())
    if (def.info.id == id)
      return run_family(def, options);
  throw UnknownFamily(std::string(id));
}

std::vector<RelationReport> check_all(const CheckOptions &options, bool parallel) {
  validate(options);
  std::vector<RelationReport> reports;
  if (!parallel) {
    for (const auto &def : registry())
      reports.push_back(run_family(def, options));
    return reports;
  }
  std::vector<std::future<RelationReport>> pending;
  for (const auto &def : registry())
    pending.push_back(std::async(std::launch::async, run_family, std::cref(def), options));
  for (auto &f : pending)
    reports.push_back(f.get());
  return reports;
}

} // namespace dunklcas
