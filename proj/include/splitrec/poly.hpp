#ifndef SPLITREC_POLY_HPP
#define SPLITREC_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "splitrec/rational.hpp"

namespace splitrec {

// Univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty list; a nonzero polynomial keeps its
// leading coefficient nonzero.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyQ constant(Rat v);
    static PolyQ x();  // the monomial x

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is intentionally unrepresentable;
    // callers must check is_zero() first.
    int degree() const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integral() const;

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rat& s) const;
    PolyQ operator-() const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    // Euclidean division; divisor must be nonzero.
    std::pair<PolyQ, PolyQ> divrem(const PolyQ& divisor) const;
    PolyQ derivative() const;
    Rat eval(const Rat& at) const;
    PolyQ monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

PolyQ gcd_polyq(PolyQ a, PolyQ b);  // monic gcd over Q
Rat resultant(PolyQ a, PolyQ b);
// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f)
Rat discriminant(const PolyQ& f);

// Polynomial over F_p, coefficients lowest degree first, residues in [0, p).
class PolyModP {
public:
    PolyModP() : p_(0) {}
    PolyModP(Int p, std::vector<Int> coeffs);
    // Reduction of a rational polynomial; throws BadPrimeError when p divides
    // a coefficient denominator.
    static PolyModP reduce(const PolyQ& f, const Int& p);
    static PolyModP x(const Int& p);
    static PolyModP constant(const Int& p, const Int& v);

    const Int& prime() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const;
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    PolyModP operator+(const PolyModP& o) const;
    PolyModP operator-(const PolyModP& o) const;
    PolyModP operator*(const PolyModP& o) const;
    bool operator==(const PolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }

    std::pair<PolyModP, PolyModP> divrem(const PolyModP& divisor) const;
    PolyModP mod(const PolyModP& m) const { return divrem(m).second; }
    PolyModP monic() const;
    Int eval(const Int& at) const;
    // Substitutes `e` (an element of F_p[x]/(modulus)) into this polynomial.
    PolyModP compose_mod(const PolyModP& e, const PolyModP& modulus) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void check_same(const PolyModP& o) const;
    void trim();
    Int p_;
    std::vector<Int> c_;
};

// base^e mod (modulus, p). Modulus must be monic of degree >= 1 and share the
// prime with base; base must already be reduced mod modulus.
PolyModP poly_mod_pow(const PolyModP& base, const Int& e, const PolyModP& modulus);

PolyModP gcd_poly(PolyModP a, PolyModP b);  // monic gcd over F_p

// Chinese remainder combination; moduli pairwise coprime, result in [0, prod).
Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli);

// Recovers a/b from residue mod M with |a| <= floor(sqrt(M/2)),
// 0 < b <= floor(sqrt(M/2)), gcd(b, M) = 1. Failure is a normal return.
std::optional<Rat> rational_reconstruct(const Int& residue, const Int& M);

// Newton lift of a simple root: r with f(r) ≡ 0 mod p, f'(r) invertible
// mod p; returns r* ≡ r mod p with f(r*) ≡ 0 mod p^K.
Int hensel_lift_root(const PolyQ& f, const Int& r, const Int& p, unsigned K);

}  // namespace splitrec

#endif
