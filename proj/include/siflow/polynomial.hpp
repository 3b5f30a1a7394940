#pragma once

// Dense univariate polynomials over Rational.  Normal form strips trailing
// zero coefficients; the zero polynomial has an empty coefficient vector.

#include <algorithm>
#include <utility>
#include <vector>

#include "siflow/rational.hpp"

namespace siflow {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
  }
  // c1 * a + c0
  static Polynomial linear(const Rational& c0, const Rational& c1) {
    return Polynomial(std::vector<Rational>{c0, c1});
  }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& coeff(int i) const {
    static const Rational kZero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
  }
  const Rational& leading_coeff() const {
    if (is_zero()) throw InternalError("leading_coeff of zero polynomial");
    return coeffs_.back();
  }

  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational constant_value() const { return coeff(0); }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
    return Polynomial(std::move(c));
  }
  Polynomial operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
      for (size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return Polynomial();
    std::vector<Rational> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r{Rational(1)};
    Polynomial b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rational(i) * coeffs_[i];
    return Polynomial(std::move(c));
  }

  // antiderivative with zero constant term
  Polynomial antiderivative() const {
    if (is_zero()) return Polynomial();
    std::vector<Rational> c(coeffs_.size() + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / Rational(i + 1);
    return Polynomial(std::move(c));
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw InternalError("polynomial division by zero");
    Polynomial r = *this;
    std::vector<Rational> q(
        std::max<int>(0, r.degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const int shift = r.degree() - d.degree();
      const Rational f = r.leading_coeff() / d.leading_coeff();
      q[static_cast<size_t>(shift)] = f;
      std::vector<Rational> sub(r.coeffs_);
      for (int i = 0; i <= d.degree(); ++i)
        sub[static_cast<size_t>(i + shift)] -= f * d.coeff(i);
      sub.pop_back();  // leading term cancels exactly
      r = Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(q)), r};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading_coeff()) * (*this);
  }

  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a.divmod(b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }
  BigFloat eval(const BigFloat& x) const {
    BigFloat r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      r = r * x + to_bigfloat(*it);
    return r;
  }

  std::string str(const std::string& var = "a") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeff(i);
      if (c == 0) continue;
      if (!out.empty()) out += (c > 0 ? " + " : " - ");
      else if (c < 0) out += "-";
      const Rational magnitude = abs(c);
      if (i == 0 || magnitude != 1) out += magnitude.str();
      if (i > 0) {
        if (magnitude != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace siflow
