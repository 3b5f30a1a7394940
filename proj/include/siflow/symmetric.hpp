#pragma once

// Symmetric-function tables of a root multiset: plain sigma_k and the
// deflated families obtained by dividing out (tau - a)^s factors.  Indices
// outside the nonzero window read as exact zero, so the recurrences that use
// out-of-window indices never branch.

#include <string>
#include <utility>
#include <vector>

#include "siflow/polynomial.hpp"
#include "siflow/rational.hpp"

namespace siflow {

struct RootMultiset {
  // ordered (root, multiplicity), roots pairwise distinct
  std::vector<std::pair<Rational, int>> entries;

  int total_degree() const {
    int n = 0;
    for (const auto& [r, m] : entries) n += m;
    return n;
  }

  void validate() const {
    for (size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].second < 1) throw SpecError("root multiplicity must be positive");
      for (size_t j = i + 1; j < entries.size(); ++j)
        if (entries[i].first == entries[j].first)
          throw SpecError("duplicate root in multiset");
    }
  }

  int multiplicity(const Rational& root) const {
    for (const auto& [r, m] : entries)
      if (r == root) return m;
    return 0;
  }

  Polynomial expand() const {
    Polynomial f{Rational(1)};
    for (const auto& [r, m] : entries)
      f = f * Polynomial::linear(-r, Rational(1)).pow(static_cast<unsigned>(m));
    return f;
  }
};

class SigmaTable {
 public:
  SigmaTable(std::string family, std::vector<Rational> vals)
      : family_(std::move(family)), vals_(std::move(vals)) {}

  // highest index inside the nonzero window
  int window() const { return static_cast<int>(vals_.size()) - 1; }
  const std::string& family() const { return family_; }

  // total-index access: exact zero outside [0, window]
  Rational at(long k) const {
    if (k < 0 || k > window()) return 0;
    return vals_[static_cast<size_t>(k)];
  }

 private:
  std::string family_;
  std::vector<Rational> vals_;
};

namespace detail {

// sigma_j = (-1)^j [tau^{d-j}] G for a monic polynomial G of degree d
inline SigmaTable signed_coefficients(const Polynomial& g, std::string family) {
  const int d = g.degree();
  std::vector<Rational> vals(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j)
    vals[static_cast<size_t>(j)] = Rational(parity_sign(j)) * g.coeff(d - j);
  return SigmaTable(std::move(family), std::move(vals));
}

}  // namespace detail

// F(tau) = sum_k (-1)^k sigma_k tau^{n-k}
inline SigmaTable sigma(const RootMultiset& f) {
  f.validate();
  return detail::signed_coefficients(f.expand(), "sigma");
}

// Coefficients of F / prod (tau - a_d)^{s_d}, sign convention shifted by the
// total deflation depth.  Rejects deflations deeper than the multiplicity.
inline SigmaTable sigma_deflated(const RootMultiset& f,
                                 const std::vector<std::pair<Rational, int>>& divisors) {
  f.validate();
  Polynomial g = f.expand();
  std::string family = "sigma";
  for (const auto& [root, s] : divisors) {
    if (s < 0) throw SpecError("negative deflation depth");
    if (s > f.multiplicity(root))
      throw SpecError("deflation depth exceeds multiplicity of root " + root.str() +
                      " (would leave a pole)");
    const Polynomial lin = Polynomial::linear(-root, Rational(1));
    for (int i = 0; i < s; ++i) {
      const auto [q, r] = g.divmod(lin);
      if (!r.is_zero()) throw InternalError("inexact deflation");
      g = q;
    }
    family += "^(" + root.str() + "," + std::to_string(s) + ")";
  }
  return detail::signed_coefficients(g, std::move(family));
}

inline SigmaTable sigma_deflated(const RootMultiset& f, const Rational& alpha, int s) {
  return sigma_deflated(f, {{alpha, s}});
}
inline SigmaTable sigma_deflated(const RootMultiset& f, const Rational& alpha, int s,
                                 const Rational& simple_root) {
  if (simple_root == alpha) throw SpecError("deflation roots must differ");
  if (f.multiplicity(simple_root) != 1)
    throw SpecError("second deflation root must be simple");
  return sigma_deflated(f, {{alpha, s}, {simple_root, 1}});
}

// P_l = (1/2)_{l-1} / (l-1)!
inline Rational pochhammer_ratio(int l) {
  if (l < 1) throw SpecError("pochhammer_ratio requires l >= 1");
  return pochhammer(Rational(1, 2), static_cast<unsigned>(l - 1)) /
         factorial(static_cast<unsigned>(l - 1));
}

// Padded variant: formulas sum P_{l-s+1} over ranges where the index can
// drop to zero or below; those terms vanish.
inline Rational pochhammer_ratio_or_zero(int l) {
  return l < 1 ? Rational(0) : pochhammer_ratio(l);
}

}  // namespace siflow
