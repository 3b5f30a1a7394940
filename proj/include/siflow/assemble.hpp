#pragma once

// Assembly of the full phase-space objects of a model: H, G, Q1, Q2 and the
// integrals S1 = Q1 + y G, S2 = Q2 + y Q1 + (y^2/2) G, with H expanded so
// everything is an explicit polynomial in (y, Pi, P_y).

#include <string>
#include <vector>

#include "siflow/model.hpp"
#include "siflow/phase_poly.hpp"

namespace siflow {

struct Model {
  ModelSpec spec;
  BasisPtr basis;
  CoefficientSet coeffs;
  std::vector<Rational> a_coeff;  // A_0..A_n of F
  PhasePolynomial H, G, Q1, Q2, S1, S2;
  RadicalElement metric_factor;  // x'/a of g = (x'/a)^2 da^2 + dy^2/a

  int degree() const { return spec.degree(); }
  // momentum degree of S1: 2n even, 2n+1 odd
  int integral_degree() const {
    return 2 * spec.degree() + (spec.parity == Parity::Odd ? 1 : 0);
  }
};

inline Model assemble_model(const ModelSpec& spec) {
  spec.validate();
  Model m;
  m.spec = spec;
  m.basis = spec.make_basis();
  m.coeffs = build_coefficients(spec, m.basis);
  m.a_coeff = a_coefficients(spec, SigmaCache(spec));

  const int n = spec.degree();
  const bool odd = spec.parity == Parity::Odd;

  m.H = PhasePolynomial::hamiltonian(m.basis);
  std::vector<PhasePolynomial> hpow{
      PhasePolynomial::monomial(RadicalElement::one(m.basis), {0, 0, 0})};
  for (int j = 1; j <= n; ++j) hpow.push_back(hpow.back() * m.H);

  // G = sum_k A_k H^k P_y^{2(n-k)}  (times an extra P_y when odd)
  m.G = PhasePolynomial::zero(m.basis);
  for (int k = 0; k <= n; ++k) {
    PhasePolynomial t = hpow[size_t(k)].shifted(0, 0, 2 * (n - k) + (odd ? 1 : 0));
    m.G = m.G + m.a_coeff[size_t(k)] * t;
  }

  // Q1: even sum_{k>=1} b_k H^{n-k} Pi P_y^{2k-1}; odd sum_{k>=0} b_k H^{n-k} Pi P_y^{2k}
  m.Q1 = PhasePolynomial::zero(m.basis);
  m.Q2 = PhasePolynomial::zero(m.basis);
  for (int k = k_begin(spec); k <= n; ++k) {
    const int py1 = odd ? 2 * k : 2 * k - 1;
    const int py2 = odd ? 2 * k + 1 : 2 * k;
    m.Q1 = m.Q1 + m.coeffs.b[size_t(k)] * hpow[size_t(n - k)].shifted(0, 1, py1);
    m.Q2 = m.Q2 + m.coeffs.c[size_t(k)] * hpow[size_t(n - k)].shifted(0, 0, py2);
  }

  m.S1 = m.Q1 + m.G.shifted(1, 0, 0);
  m.S2 = m.Q2 + m.Q1.shifted(1, 0, 0) + Rational(1, 2) * m.G.shifted(2, 0, 0);

  const int want = m.integral_degree();
  if (m.S1.max_momentum_degree() != want || m.Q1.max_momentum_degree() != want ||
      m.S2.max_momentum_degree() != want || m.G.max_momentum_degree() != want)
    throw InternalError("degree bookkeeping violated in model assembly");

  m.metric_factor =
      RationalFunction(Polynomial(Rational(1)), Polynomial::variable()) *
      m.coeffs.x_prime;
  return m;
}

}  // namespace siflow
