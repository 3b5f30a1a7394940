#pragma once

// Closed-form antiderivatives over the radical algebra.  These are the only
// integration facts the library ever uses; everything downstream is checked
// by exact differentiation.
//
// Shapes handled:
//   polynomial                          -> polynomial
//   Delta^(e/2), e odd (any sign)       -> 2 eps Delta^((e+2)/2) / (e+2)
//   Delta^-j, j >= 2                    -> -eps Delta^(1-j) / (j-1)
//   Delta_a^-(l+1/2) Delta_b^-(M+1/2)   -> I^{a,b}_{l,M} / (l-1/2),
// the last via the terminating-hypergeometric closed form, with the l = 0
// special case excluded structurally (it would need a logarithm).

#include <map>
#include <string>
#include <vector>

#include "siflow/radical.hpp"
#include "siflow/symmetric.hpp"

namespace siflow {

// 2F1(1, -K; c; z) as a terminating sum; z a polynomial in a, K >= 0.
// The lower parameter in our use is c = 3/2 - l, a half-integer, so no
// denominator factor can vanish; the guard reports the offending (l, M)
// if that assumption is ever violated.
inline RationalFunction hyp2f1_terminating(int big_k, const Rational& c,
                                           const RationalFunction& z,
                                           const std::string& context) {
  if (big_k < 0) throw InternalError("hyp2f1_terminating with negative K");
  RationalFunction sum{Rational(1)};
  RationalFunction zpow{Rational(1)};
  Rational coeff = 1;
  for (int s = 1; s <= big_k; ++s) {
    const Rational denom_factor = c + Rational(s - 1);
    if (denom_factor == 0)
      throw InternalError("vanishing lower-parameter factor in terminating 2F1 at " +
                          context);
    coeff *= Rational(-(big_k - (s - 1))) / denom_factor;
    zpow = zpow * z;
    sum = sum + coeff * zpow;
  }
  return sum;
}

// I^{alpha,beta}_{l,M} = int (l-1/2) da / (Delta_a^{l+1/2} Delta_b^{M+1/2}),
// for distinct roots, l >= 1, M >= 0.
inline RadicalElement int_hyp(const BasisPtr& basis, size_t alpha, int l, size_t beta,
                              int M) {
  if (alpha == beta) throw SpecError("I^{alpha,beta} requires distinct roots");
  if (l < 1 || M < 0) throw SpecError("I^{alpha,beta} index out of range");
  const Rational a_alpha = basis->root(alpha);
  const Rational a_beta = basis->root(beta);
  const int eps_alpha = basis->sign(alpha);
  const int eps_beta = basis->sign(beta);
  const Rational eta_tilde = Rational(eps_beta) * (a_alpha - a_beta);
  const Rational sigma = Rational(eps_alpha * eps_beta);

  const RationalFunction z =
      (-sigma / eta_tilde) * RationalFunction(basis->delta(alpha));
  const RationalFunction f21 = hyp2f1_terminating(
      l + M - 1, Rational(3, 2) - l, z,
      "I(l=" + std::to_string(l) + ",M=" + std::to_string(M) + ")");

  RadicalElement result =
      RadicalElement::delta_half_power(basis, beta, 1 - 2 * static_cast<long>(M)) *
      RadicalElement::delta_half_power(basis, alpha, -(2 * static_cast<long>(l) - 1));
  return (RationalFunction(-Rational(eps_alpha) / eta_tilde) * f21) * result;
}

// The M = 0 closed form written with the eta-sum of symmetric-function type;
// kept separate so the two routes can be compared exactly.
inline RadicalElement int_hyp_m0(const BasisPtr& basis, size_t alpha, int l, size_t beta) {
  if (alpha == beta) throw SpecError("I^{alpha,beta} requires distinct roots");
  if (l < 1) throw SpecError("I^{alpha,beta} index out of range");
  const Rational eta =
      Rational(basis->sign(alpha)) * (basis->root(beta) - basis->root(alpha));
  RadicalElement sum = RadicalElement::zero(basis);
  Rational eta_pow = 1;
  for (int s = 1; s <= l; ++s) {
    eta_pow /= eta;
    sum = sum + (eta_pow * pochhammer_ratio(l - s + 1)) *
                    RadicalElement::delta_half_power(basis, alpha,
                                                     -(2L * (l - s) + 1));
  }
  const Rational front = Rational(basis->sign(beta)) / pochhammer_ratio(l);
  return (front * RadicalElement::radical(basis, beta)) * sum;
}

// One term of an integrand: coeff * prod Delta_i^{half_i/2}.
struct RadicalMonomial {
  Rational coeff;
  std::map<size_t, long> half_exponents;  // root index -> exponent in halves
};

inline RadicalElement antiderive(const BasisPtr& basis, const RadicalMonomial& term) {
  std::vector<std::pair<size_t, long>> active;
  for (const auto& [i, h] : term.half_exponents)
    if (h != 0) active.emplace_back(i, h);

  if (term.coeff == 0) return RadicalElement::zero(basis);

  if (active.empty()) {
    // integral of a constant
    return RadicalElement::constant(
        basis, RationalFunction(term.coeff * Polynomial::variable()));
  }

  if (active.size() == 1) {
    const auto [i, h] = active.front();
    const int eps = basis->sign(i);
    if (h % 2 != 0) {
      // any odd half-power: int Delta^{h/2} = 2 eps Delta^{(h+2)/2} / (h+2)
      const Rational c = term.coeff * Rational(2 * eps, h + 2);
      return c * RadicalElement::delta_half_power(basis, i, h + 2);
    }
    if (h > 0) {
      const Polynomial p =
          term.coeff * basis->delta(i).pow(static_cast<unsigned>(h / 2));
      return RadicalElement::constant(basis, RationalFunction(p.antiderivative()));
    }
    const long j = -h / 2;
    if (j < 2)
      throw InternalError("non-integrable power Delta^" + std::to_string(-j) +
                          " (logarithmic case cannot arise here)");
    const Rational c = term.coeff * Rational(-eps, j - 1);
    return c * RadicalElement::delta_half_power(basis, i, h + 2);
  }

  if (active.size() == 2) {
    auto [i0, h0] = active[0];
    auto [i1, h1] = active[1];
    if (h0 % 2 == 0 || h1 % 2 == 0 || h0 > -1 || h1 > -1)
      throw InternalError("unsupported two-radical integrand shape");
    // put the steeper factor in the l-slot
    if (h0 > h1) {
      std::swap(i0, i1);
      std::swap(h0, h1);
    }
    const int l = static_cast<int>((-h0 - 1) / 2);
    const int M = static_cast<int>((-h1 - 1) / 2);
    if (l < 1) throw InternalError("two-radical integrand needs one power >= 3/2");
    const Rational c = term.coeff / (Rational(l) - Rational(1, 2));
    return c * int_hyp(basis, i0, l, i1, M);
  }

  throw InternalError("integrand with more than two radicals");
}

}  // namespace siflow
