#pragma once

// Polynomials in (y, Pi, P_y) with RadicalElement coefficients.  This is the
// home of H, G, Q1, Q2, S1, S2 once H = Pi^2 + a P_y^2 has been expanded.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "siflow/radical.hpp"

namespace siflow {

struct PhaseKey {
  int y = 0, pi = 0, py = 0;
  auto operator<=>(const PhaseKey&) const = default;
};

class PhasePolynomial {
 public:
  PhasePolynomial() = default;
  explicit PhasePolynomial(BasisPtr basis) : basis_(std::move(basis)) {}

  static PhasePolynomial zero(BasisPtr basis) { return PhasePolynomial(std::move(basis)); }
  static PhasePolynomial monomial(const RadicalElement& coeff, PhaseKey key) {
    PhasePolynomial p(coeff.basis());
    p.add_term(key, coeff);
    return p;
  }
  // H = Pi^2 + a P_y^2
  static PhasePolynomial hamiltonian(const BasisPtr& basis) {
    PhasePolynomial h(basis);
    h.add_term({0, 2, 0}, RadicalElement::one(basis));
    h.add_term({0, 0, 2}, RadicalElement::variable(basis));
    return h;
  }

  const BasisPtr& basis() const { return basis_; }
  const std::map<PhaseKey, RadicalElement>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int max_momentum_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.pi + k.py);
    return d;
  }

  friend PhasePolynomial operator+(const PhasePolynomial& p, const PhasePolynomial& q) {
    PhasePolynomial r = p;
    for (const auto& [k, c] : q.terms_) r.add_term(k, c);
    return r;
  }
  friend PhasePolynomial operator-(const PhasePolynomial& p, const PhasePolynomial& q) {
    PhasePolynomial r = p;
    for (const auto& [k, c] : q.terms_) r.add_term(k, -c);
    return r;
  }
  friend PhasePolynomial operator*(const PhasePolynomial& p, const PhasePolynomial& q) {
    PhasePolynomial r(p.basis_ ? p.basis_ : q.basis_);
    for (const auto& [ka, ca] : p.terms_)
      for (const auto& [kb, cb] : q.terms_)
        r.add_term({ka.y + kb.y, ka.pi + kb.pi, ka.py + kb.py}, ca * cb);
    return r;
  }
  friend PhasePolynomial operator*(const RadicalElement& s, const PhasePolynomial& p) {
    PhasePolynomial r(p.basis_);
    for (const auto& [k, c] : p.terms_) r.add_term(k, s * c);
    return r;
  }
  friend PhasePolynomial operator*(const Rational& s, const PhasePolynomial& p) {
    PhasePolynomial r(p.basis_);
    for (const auto& [k, c] : p.terms_) r.add_term(k, s * c);
    return r;
  }
  PhasePolynomial operator-() const {
    PhasePolynomial r(basis_);
    for (const auto& [k, c] : terms_) r.add_term(k, -c);
    return r;
  }
  friend bool operator==(const PhasePolynomial& p, const PhasePolynomial& q) {
    return (p - q).is_zero();
  }

  // multiply by y^j Pi^p P_y^q
  PhasePolynomial shifted(int j, int p, int q) const {
    PhasePolynomial r(basis_);
    for (const auto& [k, c] : terms_) r.add_term({k.y + j, k.pi + p, k.py + q}, c);
    return r;
  }

  PhasePolynomial pow(unsigned e) const {
    PhasePolynomial r = monomial(RadicalElement::one(basis_), {0, 0, 0});
    PhasePolynomial b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  void add_term(PhaseKey key, RadicalElement coeff) {
    if (coeff.is_zero()) return;
    if (!basis_) basis_ = coeff.basis();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(coeff));
    } else {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += "  +  ";
      out += "[" + c.str() + "]";
      if (k.y) out += " y^" + std::to_string(k.y);
      if (k.pi) out += " Pi^" + std::to_string(k.pi);
      if (k.py) out += " Py^" + std::to_string(k.py);
    }
    return out;
  }

 private:
  BasisPtr basis_;
  std::map<PhaseKey, RadicalElement> terms_;
};

}  // namespace siflow
