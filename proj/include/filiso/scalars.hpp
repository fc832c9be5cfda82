#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace filiso {

// All scalar quantities (degrees, slopes, scalar products, squared distances)
// are exact rationals in canonical form: lowest terms, positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

// Bad dimensions, ambient mismatches.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation was asked of a model that cannot support it exactly
// (non-split Frobenius, non-integral weights, enumeration bound).
struct ModelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid input: zero valuation, singular matrix,
// non-prime p, unstable subspace, non-admissible subobject.
struct MathError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A theorem-backed internal assertion failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_prime(const Int& p);
void require_prime(const Int& p);

// Exponent of p in x; throws MathError("valuation of zero") on x = 0.
long vp(const Rat& x, const Int& p);

// Canonicalized fraction n/d.
Rat frac(long n, long d = 1);

// p^e as an exact rational, e may be negative.
Rat p_power(const Int& p, long e);

// Parses "a/b", "a", or a decimal-free integer string; canonical output.
Rat rat_parse(const std::string& s);

// "a" when the denominator is 1, else "a/b".
std::string rat_str(const Rat& x);

bool is_integer(const Rat& x);
long to_long(const Rat& x);  // requires an integer value that fits

}  // namespace filiso
