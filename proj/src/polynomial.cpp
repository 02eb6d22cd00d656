#include "tmsv/polynomial.hpp"

#include "tmsv/errors.hpp"

namespace tmsv {

Polynomial Polynomial::from_coeffs(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
  return Polynomial{std::move(coeffs)};
}

Rational Polynomial::eval(const Rational& t) const {
  Rational v(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

Polynomial divide_by_t_minus_1(const Polynomial& p) {
  if (p.c.empty()) return p;
  // Synthetic division at t = 1: remainder is p(1).
  std::vector<Rational> q(p.c.size() - 1);
  Rational carry(0);
  for (int k = p.degree(); k >= 1; --k) {
    carry += p.c[k];
    q[k - 1] = carry;
  }
  if (!is_zero(carry + p.c[0]))
    throw DivisionNotExact("polynomial has no root at t = 1");
  return Polynomial::from_coeffs(std::move(q));
}

}  // namespace tmsv
