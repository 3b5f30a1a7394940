#pragma once

// Exact Poisson brackets of PhasePolynomials, plus the superintegrability
// verification (exact for small degree, high-precision numeric above the
// symbolic cutoff).
//
// Sign convention: the bracket is fixed so that {P_y, S2} = S1 and
// {P_y, S1} = G, matching the Poisson-theorem chain the construction relies
// on; equivalently {P_y, y} = +1.  In Pi = w P_a coordinates the bracket of
// monomials A = f y^j Pi^p P_y^q and B = g y^m Pi^r P_y^s reduces to
//   w (p f g' - r f' g) y^{j+m} Pi^{p+r-1} P_y^{q+s}
//   + (q m - j s) f g y^{j+m-1} Pi^{p+r} P_y^{q+s-1},
// with all Pi-dependence on a through w cancelling.  The reduction is
// re-derived against a raw-P_a oracle in the test suite.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "siflow/assemble.hpp"
#include "siflow/phase_poly.hpp"
#include "siflow/prng.hpp"

namespace siflow {

struct BracketContext {
  BasisPtr basis;
  RadicalElement w;        // a / x'
  RadicalElement w_prime;  // cached for diagnostics / numeric cross-checks
};

inline BracketContext make_bracket_context(const BasisPtr& basis,
                                           const RadicalElement& x_prime) {
  if (x_prime.is_zero()) throw SpecError("x' vanishes identically; no bracket context");
  BracketContext ctx;
  ctx.basis = basis;
  ctx.w = RadicalElement::variable(basis) * x_prime.invert();
  ctx.w_prime = ctx.w.differentiate();
  if (!(ctx.w * x_prime == RadicalElement::variable(basis)))
    throw InternalError("bracket context invariant w * x' = a failed");
  return ctx;
}
inline BracketContext make_bracket_context(const Model& m) {
  return make_bracket_context(m.basis, m.coeffs.x_prime);
}

inline PhasePolynomial poisson(const PhasePolynomial& A, const PhasePolynomial& B,
                               const BracketContext& ctx) {
  PhasePolynomial out(ctx.basis);

  std::vector<std::pair<PhaseKey, std::pair<RadicalElement, RadicalElement>>> at, bt;
  at.reserve(A.terms().size());
  bt.reserve(B.terms().size());
  for (const auto& [k, f] : A.terms()) at.push_back({k, {f, f.differentiate()}});
  for (const auto& [k, g] : B.terms()) bt.push_back({k, {g, g.differentiate()}});

  for (const auto& [ka, fa] : at) {
    const auto& [f, df] = fa;
    for (const auto& [kb, gb] : bt) {
      const auto& [g, dg] = gb;
      const int j = ka.y, p = ka.pi, q = ka.py;
      const int m = kb.y, r = kb.pi, s = kb.py;

      if (p + r >= 1) {
        RadicalElement inner = Rational(p) * (f * dg) - Rational(r) * (df * g);
        if (!inner.is_zero())
          out.add_term({j + m, p + r - 1, q + s}, ctx.w * inner);
      }
      const long ypart = static_cast<long>(q) * m - static_cast<long>(j) * s;
      if (ypart != 0)
        out.add_term({j + m - 1, p + r, q + s - 1}, Rational(ypart) * (f * g));
    }
  }
  return out;
}

inline bool is_zero(const PhasePolynomial& p) { return p.is_zero(); }

// ---------------------------------------------------------------------------
// superintegrability verification

struct SICheck {
  std::string name;
  bool exact = true;
  bool passed = false;
  // numeric mode: worst absolute residual over the sampled phase points
  BigFloat max_residual = 0;
  size_t result_terms = 0;
  double seconds = 0.0;
  std::string detail;
};

struct SIReport {
  bool all_passed = true;
  bool exact_mode = true;
  int points = 0;
  std::vector<SICheck> checks;
};

namespace detail {

// numeric bracket residual evaluator: terms of A and B carry both the
// coefficient and its exact derivative, evaluated pointwise with w = a/x'
struct NumericPoly {
  struct Term {
    PhaseKey key;
    RadicalElement f, df;
  };
  std::vector<Term> terms;
  explicit NumericPoly(const PhasePolynomial& p) {
    for (const auto& [k, f] : p.terms()) terms.push_back({k, f, f.differentiate()});
  }
};

struct PhasePointValues {
  BigFloat a, y, pa, py, w;
};

inline BigFloat ipow(const BigFloat& x, int e) {
  if (e < 0) throw InternalError("negative power in phase evaluation");
  BigFloat r = 1, b = x;
  unsigned n = static_cast<unsigned>(e);
  while (n) {
    if (n & 1u) r *= b;
    b *= b;
    n >>= 1u;
  }
  return r;
}

inline BigFloat eval_bracket_at(const NumericPoly& A, const NumericPoly& B,
                                const PhasePointValues& pt) {
  const BigFloat pi_val = pt.w * pt.pa;
  BigFloat total = 0;
  for (const auto& ta : A.terms) {
    const BigFloat f = ta.f.eval(pt.a);
    const BigFloat df = ta.df.eval(pt.a);
    for (const auto& tb : B.terms) {
      const BigFloat g = tb.f.eval(pt.a);
      const BigFloat dg = tb.df.eval(pt.a);
      const int j = ta.key.y, p = ta.key.pi, q = ta.key.py;
      const int m = tb.key.y, r = tb.key.pi, s = tb.key.py;
      if (p + r >= 1) {
        const BigFloat inner = BigFloat(p) * f * dg - BigFloat(r) * df * g;
        total += pt.w * inner * ipow(pt.y, j + m) * ipow(pi_val, p + r - 1) *
                 ipow(pt.py, q + s);
      }
      const long ypart = static_cast<long>(q) * m - static_cast<long>(j) * s;
      if (ypart != 0)
        total += BigFloat(ypart) * f * g * ipow(pt.y, j + m - 1) * ipow(pi_val, p + r) *
                 ipow(pt.py, q + s - 1);
    }
  }
  return total;
}

inline BigFloat eval_poly_at(const NumericPoly& A, const PhasePointValues& pt) {
  const BigFloat pi_val = pt.w * pt.pa;
  BigFloat total = 0;
  for (const auto& ta : A.terms)
    total += ta.f.eval(pt.a) * ipow(pt.y, ta.key.y) * ipow(pi_val, ta.key.pi) *
             ipow(pt.py, ta.key.py);
  return total;
}

}  // namespace detail

struct SIOptions {
  int symbolic_max_n = 3;
  int numeric_points = 20;
  BigFloat numeric_tolerance = BigFloat("1e-25");
  std::uint64_t seed = 1;
};

inline SIReport verify_superintegrability(const Model& model, const SIOptions& opt = {}) {
  SIReport rep;
  const PhasePolynomial py_poly =
      PhasePolynomial::monomial(RadicalElement::one(model.basis), {0, 0, 1});
  const bool exact = model.degree() <= opt.symbolic_max_n;
  rep.exact_mode = exact;

  struct Task {
    std::string name;
    const PhasePolynomial *lhs_a, *lhs_b, *target;  // {a,b} - target = 0
  };
  const std::vector<Task> tasks = {
      {"{H,P_y}", &model.H, &py_poly, nullptr},
      {"{H,S1}", &model.H, &model.S1, nullptr},
      {"{H,S2}", &model.H, &model.S2, nullptr},
      {"{P_y,S1} - G", &py_poly, &model.S1, &model.G},
      {"{P_y,S2} - S1", &py_poly, &model.S2, &model.S1},
  };

  if (exact) {
    const BracketContext ctx = make_bracket_context(model);
    for (const auto& t : tasks) {
      SICheck chk;
      chk.name = t.name;
      const auto start = std::chrono::steady_clock::now();
      PhasePolynomial residual = poisson(*t.lhs_a, *t.lhs_b, ctx);
      if (t.target) residual = residual - *t.target;
      chk.result_terms = residual.term_count();
      chk.passed = residual.is_zero();
      chk.detail = chk.passed ? "exact-zero" : ("nonzero: " + residual.str());
      chk.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
      rep.all_passed = rep.all_passed && chk.passed;
      rep.checks.push_back(std::move(chk));
    }
    return rep;
  }

  // numeric mode: high-precision residuals at random admissible phase points
  rep.points = opt.numeric_points;
  Rng rng(opt.seed);
  std::vector<detail::PhasePointValues> pts;
  const RadicalElement& xp = model.coeffs.x_prime;
  while (static_cast<int>(pts.size()) < opt.numeric_points) {
    const Rational t(rng.uniform(1, 127), 128);
    const Rational a_q = model.spec.domain_lo +
                         t * (model.spec.domain_hi - model.spec.domain_lo);
    detail::PhasePointValues pt;
    pt.a = to_bigfloat(a_q);
    pt.y = to_bigfloat(rng.rational_nonzero(8, 8));
    pt.pa = to_bigfloat(rng.rational_nonzero(8, 8));
    pt.py = to_bigfloat(rng.rational_nonzero(8, 8));
    const BigFloat xpv = xp.eval(pt.a);
    if (abs(xpv) < BigFloat("1e-6")) continue;  // stay away from x' zeros
    pt.w = pt.a / xpv;
    pts.push_back(pt);
  }

  for (const auto& t : tasks) {
    SICheck chk;
    chk.name = t.name;
    chk.exact = false;
    const auto start = std::chrono::steady_clock::now();
    const detail::NumericPoly A(*t.lhs_a), B(*t.lhs_b);
    const detail::NumericPoly* target = nullptr;
    detail::NumericPoly target_store(PhasePolynomial::zero(model.basis));
    if (t.target) {
      target_store = detail::NumericPoly(*t.target);
      target = &target_store;
    }
    BigFloat worst = 0;
    for (const auto& pt : pts) {
      BigFloat v = detail::eval_bracket_at(A, B, pt);
      if (target) v -= detail::eval_poly_at(*target, pt);
      if (abs(v) > worst) worst = abs(v);
    }
    chk.max_residual = worst;
    chk.passed = worst < opt.numeric_tolerance;
    chk.detail = "max |residual| = " + worst.str(3);
    chk.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.all_passed = rep.all_passed && chk.passed;
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace siflow
