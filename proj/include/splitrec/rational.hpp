#ifndef SPLITREC_RATIONAL_HPP
#define SPLITREC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "splitrec/errors.hpp"

namespace splitrec {

// Exact scalars. mpq_class keeps the canonical form we require:
// gcd(|num|, den) = 1 and den >= 1 after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// Parses "num", "num/den" or "-num/den" in base 10.
Rat parse_rat(const std::string& s);

// "num" when den == 1, else "num/den". Inverse of parse_rat.
std::string rat_to_string(const Rat& q);

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);

// base^e mod m, m >= 1.
Int pow_mod(const Int& base, const Int& e, const Int& m);

// Inverse of a mod m; throws Error when gcd(a, m) != 1.
Int inv_mod(const Int& a, const Int& m);

// Canonical residue in [0, m).
inline Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Reduces num/den mod p. Throws BadPrimeError when p divides den.
Int rat_mod_p(const Rat& q, const Int& p);

bool is_prime(const Int& n);

// Full factorization, ascending primes. Uses trial division then Brent rho;
// throws Error if a composite cofactor resists splitting (not expected for
// discriminants of the polynomial sizes in scope).
std::vector<Int> prime_factors(const Int& n);

// Floor square root; exact = true iff n is a perfect square.
Int isqrt(const Int& n, bool* exact = nullptr);

}  // namespace splitrec

#endif
