#include "splitrec/factor_modp.hpp"

#include <algorithm>
#include <cstdint>

namespace splitrec {

namespace {

// Deterministic PRNG seeded from (p, f).
struct SplitMix {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

SplitMix seeded_rng(const PolyModP& f) {
    uint64_t s = mpz_get_ui(f.prime().get_mpz_t());
    for (const Int& c : f.coeffs()) s = s * 0x100000001b3ull + mpz_get_ui(c.get_mpz_t()) + 1;
    return SplitMix{s};
}

PolyModP poly_derivative(const PolyModP& f) {
    if (f.is_zero() || f.degree() == 0) return PolyModP(f.prime(), {});
    std::vector<Int> r(f.coeffs().size() - 1);
    for (size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = f.coeffs()[i] * Int(i);
    return PolyModP(f.prime(), std::move(r));
}

// f with every exponent divided by p (valid when f' == 0, i.e. f = g(x^p)).
PolyModP deflate_p(const PolyModP& f) {
    unsigned long p = f.prime().get_ui();
    std::vector<Int> r;
    for (size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
    return PolyModP(f.prime(), std::move(r));
}

bool is_one(const PolyModP& f) { return !f.is_zero() && f.degree() == 0 && f.coeffs()[0] == 1; }

// Exhaustive equal-degree splitting for small p: any degree-k divisor of a
// product of degree-k irreducibles is itself irreducible.
std::vector<PolyModP> edf_exhaustive(PolyModP f, int k) {
    const Int& p = f.prime();
    unsigned long pu = p.get_ui();
    std::vector<PolyModP> out;
    std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
    c[k] = 1;
    while (!is_one(f)) {
        if (f.degree() == k) {
            out.push_back(f);
            break;
        }
        // odometer over the k low coefficients
        bool found = false;
        while (!found) {
            PolyModP cand(p, c);
            auto [q, r] = f.divrem(cand);
            if (r.is_zero()) {
                out.push_back(cand);
                f = q;
                found = true;
            }
            size_t i = 0;
            while (i < static_cast<size_t>(k)) {
                c[i] += 1;
                if (c[i] < pu) break;
                c[i] = 0;
                ++i;
            }
            if (i == static_cast<size_t>(k) && !found)
                throw Error("equal_degree_factor: exhaustive search failed");
        }
    }
    return out;
}

PolyModP random_poly(SplitMix& rng, const Int& p, int max_degree) {
    std::vector<Int> c(static_cast<size_t>(max_degree) + 1);
    for (auto& v : c) v = mod_reduce(Int(rng.next()), p);
    return PolyModP(p, std::move(c));
}

void edf_cz(const PolyModP& f, int k, SplitMix& rng, std::vector<PolyModP>& out) {
    if (f.degree() == k) {
        out.push_back(f.monic());
        return;
    }
    const Int& p = f.prime();
    Int e = (pow_int(p, static_cast<unsigned long>(k)) - 1) / 2;
    for (;;) {
        PolyModP a = random_poly(rng, p, f.degree() - 1);
        if (a.is_zero()) continue;
        PolyModP g = gcd_poly(a, f);
        if (!is_one(g) && g.degree() < f.degree()) {
            edf_cz(g, k, rng, out);
            edf_cz(f.divrem(g).first, k, rng, out);
            return;
        }
        PolyModP b = poly_mod_pow(a, e, f) - PolyModP::constant(p, 1);
        g = gcd_poly(b, f);
        if (!is_one(g) && !g.is_zero() && g.degree() > 0 && g.degree() < f.degree()) {
            edf_cz(g, k, rng, out);
            edf_cz(f.divrem(g).first, k, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<PolyModP, unsigned>> squarefree_decomposition(const PolyModP& f_in) {
    if (f_in.is_zero() || f_in.degree() < 1) throw Error("squarefree_decomposition: need degree >= 1");
    std::vector<std::pair<PolyModP, unsigned>> out;
    PolyModP f = f_in.monic();
    unsigned long p = f.prime().get_ui();

    unsigned outer = 1;  // multiplier from p-th power deflation
    for (;;) {
        PolyModP fp = poly_derivative(f);
        if (fp.is_zero()) {
            f = deflate_p(f);
            outer *= static_cast<unsigned>(p);
            continue;
        }
        PolyModP c = gcd_poly(f, fp);
        PolyModP w = f.divrem(c).first;
        unsigned i = 1;
        while (!is_one(w)) {
            PolyModP y = gcd_poly(w, c);
            PolyModP z = w.divrem(y).first;
            if (!is_one(z)) out.emplace_back(z, i * outer);
            c = c.divrem(y).first;  // exact: y | c
            w = std::move(y);
            i += 1;
        }
        if (is_one(c)) break;
        // c is a p-th power
        f = deflate_p(c);
        outer *= static_cast<unsigned>(p);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

std::vector<std::pair<int, PolyModP>> distinct_degree_factor(const PolyModP& f_in) {
    PolyModP f = f_in.monic();
    const Int& p = f.prime();
    std::vector<std::pair<int, PolyModP>> out;
    PolyModP h = PolyModP::x(p).mod(f);  // x^{p^k} mod f, incrementally
    int k = 0;
    while (!is_one(f) && f.degree() >= 1) {
        ++k;
        if (2 * k > f.degree()) {
            out.emplace_back(f.degree(), f);
            break;
        }
        h = poly_mod_pow(h, p, f);
        PolyModP g = gcd_poly(h - PolyModP::x(p).mod(f), f);
        if (!is_one(g) && g.degree() > 0) {
            out.emplace_back(k, g);
            f = f.divrem(g).first;
            h = h.mod(f);
        }
    }
    return out;
}

std::vector<PolyModP> equal_degree_factor(const PolyModP& f, int k) {
    if (f.degree() == k) return {f.monic()};
    if (f.prime() < 17) return edf_exhaustive(f.monic(), k);
    SplitMix rng = seeded_rng(f);
    std::vector<PolyModP> out;
    edf_cz(f.monic(), k, rng, out);
    return out;
}

std::vector<FactorExp> factor_modp(const PolyModP& f) {
    if (f.is_zero() || f.degree() < 1) throw Error("factor_modp: need degree >= 1");
    std::vector<FactorExp> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [k, prod] : distinct_degree_factor(part)) {
            for (const PolyModP& irr : equal_degree_factor(prod, k))
                out.push_back({irr, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorExp& a, const FactorExp& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return out;
}

std::vector<Int> roots_modp(const PolyModP& f) {
    std::vector<Int> out;
    for (const auto& fe : factor_modp(f)) {
        if (fe.factor.degree() == 1) {
            // monic x + c -> root -c
            out.push_back(mod_reduce(-fe.factor.coeffs()[0], f.prime()));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace splitrec
