#include "splitrec/poly.hpp"

#include <algorithm>
#include <sstream>

namespace splitrec {

// ---------------------------------------------------------------- PolyQ ----

PolyQ PolyQ::constant(Rat v) {
    if (v == 0) return PolyQ();
    return PolyQ({std::move(v)});
}

PolyQ PolyQ::x() { return PolyQ({Rat(0), Rat(1)}); }

int PolyQ::degree() const {
    if (c_.empty()) throw Error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Rat& PolyQ::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

bool PolyQ::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q.get_den() == 1; });
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& q : r) q = -q;
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (c_.empty() || o.c_.empty()) return PolyQ();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const Rat& s) const {
    if (s == 0) return PolyQ();
    std::vector<Rat> r(c_);
    for (auto& q : r) q *= s;
    return PolyQ(std::move(r));
}

std::pair<PolyQ, PolyQ> PolyQ::divrem(const PolyQ& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> rem(c_);
    const int dd = divisor.degree();
    if (static_cast<int>(rem.size()) - 1 < dd) return {PolyQ(), *this};
    std::vector<Rat> quot(rem.size() - dd, Rat(0));
    const Rat& lc = divisor.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] / lc;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
    return PolyQ(std::move(r));
}

Rat PolyQ::eval(const Rat& at) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

std::string PolyQ::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rat& q = c_[i];
        if (q == 0) continue;
        Rat aq = abs(q);
        if (first) {
            if (q < 0) os << "-";
            first = false;
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        bool unit_coeff = (aq == 1) && i > 0;
        if (!unit_coeff) os << rat_to_string(aq);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyQ gcd_polyq(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rat resultant(PolyQ a, PolyQ b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Rat res(1);
    while (b.degree() > 0) {
        PolyQ r = a.divrem(b).second;
        if (r.is_zero()) return Rat(0);
        long da = a.degree(), db = b.degree(), dr = r.degree();
        if ((da * db) % 2 == 1) res = -res;
        res *= pow_rat(b.leading(), static_cast<unsigned long>(da - dr));
        a = std::move(b);
        b = std::move(r);
    }
    return res * pow_rat(b.coeff(0), static_cast<unsigned long>(a.degree()));
}

Rat discriminant(const PolyQ& f) {
    if (f.is_zero() || f.degree() < 1) throw Error("discriminant needs degree >= 1");
    int d = f.degree();
    Rat r = resultant(f, f.derivative()) / f.leading();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

// ------------------------------------------------------------- PolyModP ----

PolyModP::PolyModP(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    if (p_ < 2) throw Error("PolyModP needs modulus >= 2");
    for (auto& v : c_) v = mod_reduce(v, p_);
    trim();
}

PolyModP PolyModP::reduce(const PolyQ& f, const Int& p) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (const Rat& q : f.coeffs()) c.push_back(rat_mod_p(q, p));
    return PolyModP(p, std::move(c));
}

PolyModP PolyModP::x(const Int& p) { return PolyModP(p, {Int(0), Int(1)}); }

PolyModP PolyModP::constant(const Int& p, const Int& v) { return PolyModP(p, {v}); }

int PolyModP::degree() const {
    if (c_.empty()) throw Error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

void PolyModP::check_same(const PolyModP& o) const {
    if (p_ != o.p_) throw Error("mismatched primes: " + p_.get_str() + " vs " + o.p_.get_str());
}

void PolyModP::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::operator+(const PolyModP& o) const {
    check_same(o);
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = mod_reduce(r[i] + o.c_[i], p_);
    return PolyModP(p_, std::move(r));
}

PolyModP PolyModP::operator-(const PolyModP& o) const {
    check_same(o);
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = mod_reduce(r[i] - o.c_[i], p_);
    return PolyModP(p_, std::move(r));
}

PolyModP PolyModP::operator*(const PolyModP& o) const {
    check_same(o);
    if (c_.empty() || o.c_.empty()) return PolyModP(p_, {});
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    for (auto& v : r) v = mod_reduce(v, p_);
    return PolyModP(p_, std::move(r));
}

std::pair<PolyModP, PolyModP> PolyModP::divrem(const PolyModP& divisor) const {
    check_same(divisor);
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<Int> rem(c_);
    const int dd = divisor.degree();
    if (static_cast<int>(rem.size()) - 1 < dd) return {PolyModP(p_, {}), *this};
    Int lcinv = inv_mod(divisor.c_.back(), p_);
    std::vector<Int> quot(rem.size() - dd, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Int q = mod_reduce(rem[i] * lcinv, p_);
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = mod_reduce(rem[i - dd + j] - q * divisor.c_[j], p_);
    }
    return {PolyModP(p_, std::move(quot)), PolyModP(p_, std::move(rem))};
}

PolyModP PolyModP::monic() const {
    if (is_zero() || is_monic()) return *this;
    Int lcinv = inv_mod(c_.back(), p_);
    std::vector<Int> r(c_);
    for (auto& v : r) v = mod_reduce(v * lcinv, p_);
    return PolyModP(p_, std::move(r));
}

Int PolyModP::eval(const Int& at) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_reduce(acc * at + *it, p_);
    return acc;
}

PolyModP PolyModP::compose_mod(const PolyModP& e, const PolyModP& modulus) const {
    check_same(e);
    check_same(modulus);
    PolyModP acc(p_, {});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = (acc * e + PolyModP::constant(p_, *it)).mod(modulus);
    return acc;
}

std::string PolyModP::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c_[i] != 1 || i == 0) os << c_[i].get_str();
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyModP poly_mod_pow(const PolyModP& base, const Int& e, const PolyModP& modulus) {
    if (!modulus.is_monic() || modulus.degree() < 1)
        throw Error("poly_mod_pow: modulus must be monic of degree >= 1");
    if (base.prime() != modulus.prime())
        throw Error("poly_mod_pow: mismatched primes");
    if (e < 0) throw Error("poly_mod_pow: negative exponent");
    const Int& p = base.prime();
    PolyModP result = PolyModP::constant(p, 1);
    PolyModP sq = base.mod(modulus);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * sq).mod(modulus);
        if (i + 1 < bits) sq = (sq * sq).mod(modulus);
    }
    return result;
}

PolyModP gcd_poly(PolyModP a, PolyModP b) {
    while (!b.is_zero()) {
        PolyModP r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Int crt(const std::vector<Int>& residues, const std::vector<Int>& moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw Error("crt: residue/modulus length mismatch");
    Int r = mod_reduce(residues[0], moduli[0]);
    Int m = moduli[0];
    for (size_t i = 1; i < residues.size(); ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), moduli[i].get_mpz_t());
        if (g != 1) throw Error("crt: moduli not coprime");
        // r' ≡ r (mod m), r' ≡ residues[i] (mod moduli[i])
        Int t = mod_reduce((residues[i] - r) * inv_mod(m, moduli[i]), moduli[i]);
        r += m * t;
        m *= moduli[i];
        r = mod_reduce(r, m);
    }
    return r;
}

std::optional<Rat> rational_reconstruct(const Int& residue, const Int& M) {
    if (residue < 0 || residue >= M) throw Error("rational_reconstruct: residue out of range");
    Int bound = isqrt(M / 2);
    // half-extended Euclid on (M, residue), tracking v with v*residue ≡ r (mod M)
    Int r0 = M, r1 = residue;
    Int v0 = 0, v1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    Int a = r1, b = v1;
    if (b < 0) {
        a = -a;
        b = -b;
    }
    if (b == 0 || b > bound || abs(a) > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), M.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat q = make_rat(a, b);
    // the quotient chain can land on a non-reduced pair; certify before returning
    if (mod_reduce(q.get_den() * residue - q.get_num(), M) != 0) return std::nullopt;
    return q;
}

Int hensel_lift_root(const PolyQ& f, const Int& r, const Int& p, unsigned K) {
    if (!f.is_integral()) throw Error("hensel_lift_root: f must have integer coefficients");
    if (K == 0) throw Error("hensel_lift_root: K must be >= 1");
    auto eval_mod = [&f](const Int& at, const Int& m) {
        Int acc(0);
        for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
            acc = mod_reduce(acc * at + it->get_num(), m);
        return acc;
    };
    PolyQ fp = f.derivative();
    auto evald_mod = [&fp](const Int& at, const Int& m) {
        Int acc(0);
        for (auto it = fp.coeffs().rbegin(); it != fp.coeffs().rend(); ++it)
            acc = mod_reduce(acc * at + it->get_num(), m);
        return acc;
    };
    Int root = mod_reduce(r, p);
    if (eval_mod(root, p) != 0) throw Error("hensel_lift_root: not a root mod p");
    if (evald_mod(root, p) == 0) throw Error("hensel_lift_root: singular root (f'(r) ≡ 0 mod p)");
    unsigned k = 1;
    while (k < K) {
        k = std::min(2 * k, K);
        Int m = pow_int(p, k);
        Int deriv = evald_mod(root, m);
        root = mod_reduce(root - eval_mod(root, m) * inv_mod(deriv, m), m);
    }
    return root;
}

}  // namespace splitrec
