#include "splitrec/rational.hpp"

#include <algorithm>
#include <set>

namespace splitrec {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return make_rat(n, d);
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse rational: '" + s + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long e) {
    return Rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

Int pow_mod(const Int& base, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("not invertible mod " + m.get_str());
    return r;
}

Int rat_mod_p(const Rat& q, const Int& p) {
    const Int& d = q.get_den();
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
        throw BadPrimeError(p.get_ui());
    Int r = mod_reduce(q.get_num(), p);
    if (d != 1) r = mod_reduce(r * inv_mod(mod_reduce(d, p), p), p);
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 50 rounds of Miller-Rabin (GMP mixes in BPSW); adequate for divisors of
    // discriminants we actually meet.
    return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

Int isqrt(const Int& n, bool* exact) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (exact) *exact = (r * r == n);
    return r;
}

namespace {

Int rho_brent(const Int& n) {
    // Brent's cycle variant, deterministic parameter sweep.
    for (unsigned long c = 1; c < 64; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = mod_reduce(y * y + c, n);
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(Int(128), r - k);
                for (Int i = 0; i < lim; ++i) {
                    y = mod_reduce(y * y + c, n);
                    q = mod_reduce(q * abs(x - y), n);
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            g = 1;
            while (g == 1) {
                ys = mod_reduce(ys * ys + c, n);
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
    throw Error("factorization stalled on " + n.get_str());
}

void factor_into(Int n, std::set<Int>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        out.insert(n);
        return;
    }
    Int d = rho_brent(n);
    factor_into(d, out);
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    factor_into(n, out);
}

}  // namespace

std::vector<Int> prime_factors(const Int& n) {
    Int m = abs(n);
    std::set<Int> found;
    if (m <= 1) return {};
    for (unsigned long p = 2; p < 1000000ul && m > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            found.insert(Int(p));
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
        }
    }
    factor_into(m, found);
    return {found.begin(), found.end()};
}

}  // namespace splitrec
