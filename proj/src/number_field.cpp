#include "splitrec/number_field.hpp"

#include <algorithm>
#include <bitset>
#include <sstream>

#include "splitrec/factor_modp.hpp"

namespace splitrec {

namespace {

// Degree screen: possible degrees of a rational factor are subset sums of the
// mod-p factor degree multiset. If, across several good primes, no proper
// nonzero degree survives the intersection, f is irreducible.
bool screen_irreducible(const PolyQ& f, const Int& disc) {
    const int d = f.degree();
    if (d == 1) return true;
    // rational root test disproves irreducibility cheaply for d > 1
    // (monic integral: candidate roots divide the constant term)
    if (f.coeff(0) == 0) throw NotIrreducibleError("x divides " + f.to_string());
    for (const Int& p : prime_factors(f.coeff(0).get_num())) {
        for (const Int& r : {Int(p), Int(-p)}) {
            if (f.eval(Rat(r)) == 0)
                throw NotIrreducibleError("rational root " + r.get_str() + " of " + f.to_string());
        }
    }
    if (f.eval(Rat(1)) == 0 || f.eval(Rat(-1)) == 0)
        throw NotIrreducibleError("rational root ±1 of " + f.to_string());

    std::bitset<64> possible;  // degrees of potential rational factors
    for (int i = 0; i <= d; ++i) possible.set(i);
    int used = 0;
    for (Int p = 2; used < 12 && p < 2000; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t())) continue;
        ++used;
        std::vector<int> degs;
        for (const auto& [k, prod] : distinct_degree_factor(PolyModP::reduce(f, p)))
            for (int i = 0; i < prod.degree() / k; ++i) degs.push_back(k);
        std::bitset<64> sums;
        sums.set(0);
        for (int k : degs) sums |= sums << k;
        possible &= sums;
        bool proper = false;
        for (int i = 1; i < d; ++i) proper |= possible.test(i);
        if (!proper) return true;
    }
    return false;  // inconclusive
}

}  // namespace

NumberField::NumberField(PolyQ f, int d, Int disc, bool proven)
    : f_(std::move(f)), d_(d), disc_(std::move(disc)), proven_irreducible_(proven) {}

std::shared_ptr<const NumberField> NumberField::create(PolyQ defining_poly) {
    if (defining_poly.is_zero() || defining_poly.degree() < 1)
        throw Error("defining polynomial must have degree >= 1");
    if (!defining_poly.is_monic()) throw Error("defining polynomial must be monic");
    if (!defining_poly.is_integral()) throw Error("defining polynomial must have integer coefficients");
    int d = defining_poly.degree();
    Rat disc_q = d == 1 ? Rat(1) : discriminant(defining_poly);
    if (disc_q == 0) throw NotIrreducibleError("zero discriminant (repeated factor)");
    Int disc = disc_q.get_num();
    bool proven = screen_irreducible(defining_poly, disc);
    return std::shared_ptr<const NumberField>(
        new NumberField(std::move(defining_poly), d, std::move(disc), proven));
}

NFElem::NFElem(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw Error("element needs a field");
    if (static_cast<int>(coords_.size()) > field_->degree())
        throw Error("coordinate vector longer than field degree");
    coords_.resize(field_->degree(), Rat(0));
}

NFElem NFElem::zero(const FieldPtr& field) { return NFElem(field, {}); }

NFElem NFElem::one(const FieldPtr& field) { return NFElem(field, {Rat(1)}); }

NFElem NFElem::gen(const FieldPtr& field) {
    if (field->degree() == 1) {
        // θ is the (rational) root of the linear defining polynomial
        return NFElem(field, {-field->poly().coeff(0)});
    }
    return NFElem(field, {Rat(0), Rat(1)});
}

NFElem NFElem::from_rat(const FieldPtr& field, Rat value) { return NFElem(field, {std::move(value)}); }

bool NFElem::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& q) { return q == 0; });
}

void NFElem::check_field(const NFElem& o) const {
    if (field_.get() != o.field_.get()) throw Error("elements of different fields");
}

NFElem NFElem::operator+(const NFElem& o) const {
    check_field(o);
    std::vector<Rat> r(coords_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
    return NFElem(field_, std::move(r));
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator-() const {
    std::vector<Rat> r(coords_);
    for (auto& q : r) q = -q;
    return NFElem(field_, std::move(r));
}

NFElem NFElem::operator*(const Rat& s) const {
    std::vector<Rat> r(coords_);
    for (auto& q : r) q *= s;
    return NFElem(field_, std::move(r));
}

NFElem NFElem::operator*(const NFElem& o) const {
    check_field(o);
    const int d = field_->degree();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    // reduce mod the monic defining polynomial
    const PolyQ& f = field_->poly();
    for (int i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        Rat q = prod[i];
        prod[i] = 0;
        for (int j = 0; j < d; ++j) prod[i - d + j] -= q * f.coeff(j);
    }
    prod.resize(d);
    return NFElem(field_, std::move(prod));
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw Error("inversion of zero");
    // extended Euclid in Q[x] against the defining polynomial
    PolyQ a = field_->poly();
    PolyQ b(coords_);
    PolyQ s0, s1 = PolyQ::constant(Rat(1));  // coefficients of b
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        PolyQ s2 = s0 - q * s1;
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.degree() != 0)
        throw Error("zero divisor: defining polynomial is reducible");
    PolyQ inv = s0 * (Rat(1) / a.coeff(0));
    std::vector<Rat> r(inv.coeffs());
    return NFElem(field_, std::move(r));
}

NFElem NFElem::pow(unsigned long e) const {
    NFElem acc = NFElem::one(field_);
    NFElem sq = *this;
    while (e) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    return acc;
}

bool NFElem::operator==(const NFElem& o) const {
    return field_.get() == o.field_.get() && coords_ == o.coords_;
}

std::string NFElem::to_string() const {
    PolyQ as_poly(coords_);
    return as_poly.to_string("θ");
}

std::optional<Rat> element_is_rational(const NFElem& a) {
    for (size_t i = 1; i < a.coords().size(); ++i)
        if (a.coords()[i] != 0) return std::nullopt;
    return a.coords().empty() ? Rat(0) : a.coords()[0];
}

PolyQ min_poly(const NFElem& a) {
    const int d = a.field()->degree();
    // rows: coordinates of a^0, a^1, ...; find first linear dependency
    std::vector<NFElem> powers{NFElem::one(a.field())};
    for (int k = 1; k <= d; ++k) {
        powers.push_back(powers.back() * a);
        // solve: sum_{i<k} c_i a^i = a^k ?
        MatQ m(d, std::vector<Rat>(k));
        std::vector<Rat> rhs(d);
        for (int row = 0; row < d; ++row) {
            for (int i = 0; i < k; ++i) m[row][i] = powers[i].coords()[row];
            rhs[row] = powers[k].coords()[row];
        }
        // overdetermined consistency solve on the augmented system
        MatQ aug = m;
        for (int row = 0; row < d; ++row) aug[row].push_back(rhs[row]);
        int rank = 0;
        std::vector<int> pivot_col;
        for (int col = 0; col < k && rank < d; ++col) {
            int sel = -1;
            for (int row = rank; row < d; ++row)
                if (aug[row][col] != 0) {
                    sel = row;
                    break;
                }
            if (sel < 0) continue;
            std::swap(aug[sel], aug[rank]);
            for (int row = 0; row < d; ++row) {
                if (row == rank || aug[row][col] == 0) continue;
                Rat factor = aug[row][col] / aug[rank][col];
                for (int j = col; j <= k; ++j) aug[row][j] -= factor * aug[rank][j];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        bool consistent = true;
        for (int row = rank; row < d; ++row)
            if (aug[row][k] != 0) consistent = false;
        if (consistent && rank == k) {
            std::vector<Rat> coeffs(k + 1);
            for (int i = 0; i < k; ++i) coeffs[pivot_col[i]] = aug[i][k] / aug[i][pivot_col[i]];
            for (int i = 0; i < k; ++i) coeffs[i] = -coeffs[i];
            coeffs[k] = Rat(1);
            return PolyQ(std::move(coeffs));
        }
    }
    throw Error("min_poly: no dependency found (internal error)");
}

NFElem eval_poly_at(const PolyQ& f, const NFElem& at) {
    NFElem acc = NFElem::zero(at.field());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * at + NFElem::from_rat(at.field(), *it);
    return acc;
}

std::vector<Rat> solve_linear_q(MatQ m, std::vector<Rat> rhs) {
    const size_t n = m.size();
    if (n == 0 || m[0].size() != n || rhs.size() != n)
        throw Error("solve_linear_q: need a square system");
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) throw SingularSystemError("singular rational matrix");
        std::swap(m[sel], m[col]);
        std::swap(rhs[sel], rhs[col]);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

std::vector<NFElem> solve_linear_over_L(MatL m, std::vector<NFElem> rhs) {
    const size_t n = m.size();
    if (n == 0 || m[0].size() != n || rhs.size() != n)
        throw Error("solve_linear_over_L: need a square system");
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) throw SingularSystemError("singular matrix over L");
        std::swap(m[sel], m[col]);
        std::swap(rhs[sel], rhs[col]);
        NFElem pivot_inv = m[col][col].inverse();
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            NFElem f = m[row][col] * pivot_inv;
            for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
            rhs[row] = rhs[row] - f * rhs[col];
        }
    }
    std::vector<NFElem> x;
    x.reserve(n);
    for (size_t i = 0; i < n; ++i) x.push_back(rhs[i] * m[i][i].inverse());
    return x;
}

Rat det_q(MatQ m) {
    const size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

NFElem det_l(MatL m) {
    const size_t n = m.size();
    if (n == 0) throw Error("det of empty matrix");
    NFElem det = NFElem::one(m[0][0].field());
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) return NFElem::zero(det.field());
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        NFElem pivot_inv = m[col][col].inverse();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            NFElem f = m[row][col] * pivot_inv;
            for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    return det;
}

}  // namespace splitrec
