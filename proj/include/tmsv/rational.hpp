#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tmsv {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 as long as
// values are built from canonical inputs; every arithmetic result stays
// canonical.
using Rational = mpq_class;
using Integer = mpz_class;

using QVec = std::vector<Rational>;

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace tmsv
