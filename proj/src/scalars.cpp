#include "filiso/scalars.hpp"

namespace filiso {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

void require_prime(const Int& p) {
  if (!is_prime(p)) throw MathError("p is not prime: " + p.get_str());
}

long vp(const Rat& x, const Int& p) {
  if (x == 0) throw MathError("valuation of zero");
  Int tmp;
  long vnum = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
  long vden = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
  return vnum - vden;
}

Rat frac(long n, long d) {
  if (d == 0) throw MathError("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat p_power(const Int& p, long e) {
  Int num = 1, den = 1;
  if (e >= 0) {
    mpz_pow_ui(num.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_pow_ui(den.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-e));
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw MathError("cannot parse rational: " + s);
  if (r.get_den() == 0) throw MathError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

long to_long(const Rat& x) {
  if (!is_integer(x)) throw MathError("not an integer: " + rat_str(x));
  if (!x.get_num().fits_slong_p()) throw MathError("integer out of range");
  return x.get_num().get_si();
}

}  // namespace filiso
