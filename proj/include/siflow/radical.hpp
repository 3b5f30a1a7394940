#pragma once

// Exact arithmetic in Q(a)[R_1..R_t] / (R_i^2 - eps_i (a - a_i)).
//
// Elements are kept in normal form: a map from square-free radical masks to
// RationalFunction coefficients, with zero coefficients absent.  Equality is
// normal-form equality; there is no numeric shortcut anywhere in this layer.
// All numeric evaluation fixes the positive branch R_i = +sqrt(Delta_i).

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "siflow/rational_function.hpp"

namespace siflow {

// Paper examples stop at degree 5; the conjugation-based inverse doubles
// work per root, so keep the extension small.
inline constexpr int kMaxRadicalRoots = 8;

class RadicalBasis {
 public:
  RadicalBasis() = default;
  RadicalBasis(std::vector<std::pair<Rational, int>> roots) : roots_(std::move(roots)) {
    if (static_cast<int>(roots_.size()) > kMaxRadicalRoots)
      throw SpecError("radical basis larger than supported maximum");
    for (size_t i = 0; i < roots_.size(); ++i) {
      if (roots_[i].second != 1 && roots_[i].second != -1)
        throw SpecError("radical basis sign must be +1 or -1");
      for (size_t j = i + 1; j < roots_.size(); ++j)
        if (roots_[i].first == roots_[j].first)
          throw SpecError("duplicate root in radical basis");
    }
  }

  size_t size() const { return roots_.size(); }
  const Rational& root(size_t i) const { return roots_.at(i).first; }
  int sign(size_t i) const { return roots_.at(i).second; }

  // Delta_i = eps_i (a - a_i)
  Polynomial delta(size_t i) const {
    const int eps = sign(i);
    return Polynomial::linear(Rational(-eps) * root(i), Rational(eps));
  }

  int index_of(const Rational& r) const {
    for (size_t i = 0; i < roots_.size(); ++i)
      if (roots_[i].first == r) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const RadicalBasis& x, const RadicalBasis& y) {
    return x.roots_ == y.roots_;
  }

 private:
  std::vector<std::pair<Rational, int>> roots_;
};

using BasisPtr = std::shared_ptr<const RadicalBasis>;

inline BasisPtr make_basis(std::vector<std::pair<Rational, int>> roots) {
  return std::make_shared<RadicalBasis>(std::move(roots));
}

class RadicalElement {
 public:
  using Mask = std::uint32_t;

  RadicalElement() = default;
  explicit RadicalElement(BasisPtr basis) : basis_(std::move(basis)) {}

  static RadicalElement zero(BasisPtr basis) { return RadicalElement(std::move(basis)); }
  static RadicalElement constant(BasisPtr basis, const Rational& c) {
    return constant(std::move(basis), RationalFunction(c));
  }
  static RadicalElement constant(BasisPtr basis, RationalFunction f) {
    RadicalElement e(std::move(basis));
    e.set_term(0, std::move(f));
    return e;
  }
  static RadicalElement one(BasisPtr basis) {
    return constant(std::move(basis), Rational(1));
  }
  // the coordinate function a itself
  static RadicalElement variable(BasisPtr basis) {
    return constant(std::move(basis), RationalFunction::variable());
  }
  // R_i = sqrt(Delta_i)
  static RadicalElement radical(BasisPtr basis, size_t i) {
    RadicalElement e(basis);
    if (i >= basis->size()) throw InternalError("radical index out of range");
    e.set_term(Mask(1) << i, RationalFunction(Rational(1)));
    return e;
  }

  // Delta_i^(half/2) for any integer `half` (for example half = -3 gives
  // Delta^{-3/2} = R_i / Delta_i^2).  Keeps the R-exponent in {0,1}.
  static RadicalElement delta_half_power(BasisPtr basis, size_t i, long half) {
    if (i >= basis->size()) throw InternalError("radical index out of range");
    long q = half / 2;
    long r = half % 2;
    if (r < 0) {
      r += 2;
      q -= 1;
    }
    const Polynomial d = basis->delta(i);
    RationalFunction coeff(Rational(1));
    if (q >= 0)
      coeff = RationalFunction(d.pow(static_cast<unsigned>(q)));
    else
      coeff = RationalFunction(Polynomial(Rational(1)), d.pow(static_cast<unsigned>(-q)));
    RadicalElement e(std::move(basis));
    e.set_term(r == 1 ? (Mask(1) << i) : Mask(0), std::move(coeff));
    return e;
  }

  // General term c * a^apow * prod R_i^{e_i} with arbitrary e_i >= 0,
  // normalized via R_i^2 = Delta_i.
  static RadicalElement monomial(BasisPtr basis, const Rational& c, unsigned apow,
                                 const std::vector<unsigned>& exps) {
    if (exps.size() > basis->size()) throw SpecError("exponent vector longer than basis");
    Polynomial p = Rational(c) * Polynomial::variable().pow(apow);
    Mask mask = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] % 2 == 1) mask |= Mask(1) << i;
      p = p * basis->delta(i).pow(exps[i] / 2);
    }
    RadicalElement e(std::move(basis));
    e.set_term(mask, RationalFunction(std::move(p)));
    return e;
  }

  const BasisPtr& basis() const { return basis_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Mask, RationalFunction>& terms() const { return terms_; }

  // true when no radical actually appears
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  RationalFunction rational_part() const {
    const auto it = terms_.find(0);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  friend RadicalElement operator+(const RadicalElement& x, const RadicalElement& y) {
    check_same_basis(x, y);
    RadicalElement r = x;
    for (const auto& [m, f] : y.terms_) r.add_term(m, f);
    return r;
  }
  friend RadicalElement operator-(const RadicalElement& x, const RadicalElement& y) {
    check_same_basis(x, y);
    RadicalElement r = x;
    for (const auto& [m, f] : y.terms_) r.add_term(m, -f);
    return r;
  }
  RadicalElement operator-() const {
    RadicalElement r = *this;
    for (auto& [m, f] : r.terms_) f = -f;
    return r;
  }
  friend RadicalElement operator*(const RadicalElement& x, const RadicalElement& y) {
    check_same_basis(x, y);
    RadicalElement r(x.basis_);
    for (const auto& [mx, fx] : x.terms_) {
      for (const auto& [my, fy] : y.terms_) {
        RationalFunction f = fx * fy;
        const Mask shared = mx & my;
        for (size_t i = 0; i < x.basis_->size(); ++i)
          if (shared & (Mask(1) << i))
            f = f * RationalFunction(x.basis_->delta(i));
        r.add_term(mx ^ my, std::move(f));
      }
    }
    return r;
  }
  friend RadicalElement operator*(const Rational& s, const RadicalElement& x) {
    return RationalFunction(s) * x;
  }
  friend RadicalElement operator*(const RationalFunction& s, const RadicalElement& x) {
    RadicalElement r(x.basis_);
    if (s.is_zero()) return r;
    for (const auto& [m, f] : x.terms_) r.set_term(m, s * f);
    return r;
  }
  friend bool operator==(const RadicalElement& x, const RadicalElement& y) {
    return (x - y).is_zero();
  }

  // d/da, using R_i' / R_i = 1 / (2 (a - a_i)).
  RadicalElement differentiate() const {
    RadicalElement r(basis_);
    for (const auto& [m, f] : terms_) {
      RationalFunction df = f.derivative();
      for (size_t i = 0; i < basis_->size(); ++i) {
        if (m & (Mask(1) << i)) {
          const RationalFunction half_log(
              Polynomial(Rational(1)),
              Polynomial::linear(Rational(-2) * basis_->root(i), Rational(2)));
          df = df + f * half_log;
        }
      }
      r.add_term(m, std::move(df));
    }
    return r;
  }

  RadicalElement conjugate(size_t i) const {
    RadicalElement r(basis_);
    for (const auto& [m, f] : terms_)
      r.set_term(m, (m & (Mask(1) << i)) ? -f : f);
    return r;
  }

  // Multiplicative inverse by iterated conjugation: each step eliminates one
  // radical from the denominator, so the recursion depth is the number of
  // active roots.
  RadicalElement invert() const {
    if (is_zero()) throw DomainError("division by zero radical element");
    if (is_rational()) {
      return constant(basis_, RationalFunction(Rational(1)) / rational_part());
    }
    Mask active = 0;
    for (const auto& [m, f] : terms_) active |= m;
    size_t pivot = 0;
    while (!(active & (Mask(1) << pivot))) ++pivot;
    const RadicalElement conj = conjugate(pivot);
    const RadicalElement reduced = (*this) * conj;
    if (reduced.is_zero())
      throw InternalError("conjugation annihilated a nonzero element");
    return conj * reduced.invert();
  }

  // Positive-branch evaluation.  Every basis Delta must be positive at the
  // sample point, i.e. the point lies in the model's working interval.
  BigFloat eval(const BigFloat& a) const {
    std::vector<BigFloat> sq(basis_ ? basis_->size() : 0);
    for (size_t i = 0; i < sq.size(); ++i) {
      const BigFloat d = basis_->delta(i).eval(a);
      if (d <= 0)
        throw DomainError("Delta factor non-positive at evaluation point, root a_" +
                          std::to_string(i + 1) + " = " + basis_->root(i).str());
      sq[i] = sqrt(d);
    }
    BigFloat total = 0;
    for (const auto& [m, f] : terms_) {
      BigFloat v = f.eval(a);
      for (size_t i = 0; i < sq.size(); ++i)
        if (m & (Mask(1) << i)) v *= sq[i];
      total += v;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, f] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + f.str() + ")";
      for (size_t i = 0; i < basis_->size(); ++i)
        if (m & (Mask(1) << i)) out += "*R" + std::to_string(i + 1);
    }
    return out;
  }

 private:
  static void check_same_basis(const RadicalElement& x, const RadicalElement& y) {
    if (x.basis_ == y.basis_) return;
    if (x.basis_ && y.basis_ && *x.basis_ == *y.basis_) return;
    throw SpecError("radical elements over different bases");
  }

  void set_term(Mask m, RationalFunction f) {
    if (!f.is_zero()) terms_[m] = std::move(f);
  }
  void add_term(Mask m, RationalFunction f) {
    if (f.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(f));
    } else {
      it->second = it->second + f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasisPtr basis_;
  std::map<Mask, RationalFunction> terms_;
};

}  // namespace siflow
