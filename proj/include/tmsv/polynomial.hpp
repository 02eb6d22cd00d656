#pragma once

#include <vector>

#include "tmsv/rational.hpp"

namespace tmsv {

// Univariate polynomial with exact rational coefficients, ascending degree,
// no stored trailing zeros (empty vector = zero polynomial).
struct Polynomial {
  std::vector<Rational> c;

  static Polynomial from_coeffs(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rational(0);
  }
  Rational eval(const Rational& t) const;
  bool operator==(const Polynomial& o) const { return c == o.c; }
};

// Quotient of p by (t - 1); throws DivisionNotExact unless p(1) = 0.
Polynomial divide_by_t_minus_1(const Polynomial& p);

}  // namespace tmsv
