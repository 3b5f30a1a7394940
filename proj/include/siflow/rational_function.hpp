#pragma once

// Quotients of polynomials in the variable a.  Normal form: denominator
// monic and coprime to the numerator; zero is 0/1.

#include <utility>

#include "siflow/polynomial.hpp"
#include "siflow/rational.hpp"

namespace siflow {

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InternalError("rational function with zero denominator");
    normalize();
  }

  static RationalFunction variable() {
    return RationalFunction(Polynomial::variable());
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  Rational constant_value() const {
    if (!is_constant()) throw InternalError("constant_value of non-constant");
    return num_.constant_value();
  }
  Polynomial polynomial_value() const {
    if (!is_polynomial()) throw InternalError("polynomial_value of true quotient");
    return num_;
  }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend RationalFunction operator*(const Rational& s, const RationalFunction& f) {
    return RationalFunction(s * f.num_, f.den_);
  }
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.is_zero()) throw DomainError("division by zero rational function");
    return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
  }
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                            den_ * den_);
  }

  Rational eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d == 0) throw DomainError("rational function pole at sample point");
    return num_.eval(x) / d;
  }
  BigFloat eval(const BigFloat& x) const {
    const BigFloat d = den_.eval(x);
    if (d == 0) throw DomainError("rational function pole at sample point");
    return num_.eval(x) / d;
  }

  std::string str(const std::string& var = "a") const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(Rational(1));
      return;
    }
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    const Rational lead = den_.leading_coeff();
    if (lead != 1) {
      const Rational inv = Rational(1) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Polynomial num_, den_;
};

}  // namespace siflow
