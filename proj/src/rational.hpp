#ifndef BKIT_RATIONAL_HPP
#define BKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace bkit {

// Exact rational arithmetic is delegated to GMP. mpq_class keeps values
// canonical (reduced, positive denominator), which is exactly the invariant
// the rest of the code relies on.
using Rational = mpq_class;
using BigInt = mpz_class;

// "num/den" with den > 0, or plain "num" when den == 1.
std::string rational_to_string(const Rational& q);

// Accepts "a/b" and "a"; rejects zero denominators and garbage.
std::optional<Rational> rational_from_string(const std::string& s);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Exact square root when q is a perfect rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace bkit

#endif
