#ifndef SPLITREC_NUMBER_FIELD_HPP
#define SPLITREC_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <vector>

#include "splitrec/poly.hpp"

namespace splitrec {

// L = Q[x]/(f) for a monic integral f of degree d >= 1 with disc(f) != 0.
//
// Construction screens irreducibility by factoring mod several primes and
// combining degree arguments; a proof of reducibility (rational root, or an
// empty possible-degree set is impossible — see proven_irreducible()) rejects.
// An inconclusive screen is accepted: Galois discovery fails loudly on
// reducible input, which is the certifying step.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static std::shared_ptr<const NumberField> create(PolyQ defining_poly);

    const PolyQ& poly() const { return f_; }
    int degree() const { return d_; }
    const Int& disc() const { return disc_; }
    bool proven_irreducible() const { return proven_irreducible_; }

private:
    NumberField(PolyQ f, int d, Int disc, bool proven);
    PolyQ f_;
    int d_;
    Int disc_;
    bool proven_irreducible_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of L as coordinates over the power basis 1, θ, ..., θ^{d-1}.
class NFElem {
public:
    NFElem() = default;
    NFElem(FieldPtr field, std::vector<Rat> coords);
    static NFElem zero(const FieldPtr& field);
    static NFElem one(const FieldPtr& field);
    static NFElem gen(const FieldPtr& field);  // θ
    static NFElem from_rat(const FieldPtr& field, Rat value);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator-() const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator*(const Rat& s) const;
    NFElem inverse() const;  // throws Error on zero (or on a zero divisor
                             // when the defining polynomial was reducible)
    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
    NFElem pow(unsigned long e) const;
    bool operator==(const NFElem& o) const;

    std::string to_string() const;

private:
    void check_field(const NFElem& o) const;
    FieldPtr field_;
    std::vector<Rat> coords_;
};

// Returns the value iff all coordinates above the constant one vanish.
std::optional<Rat> element_is_rational(const NFElem& a);

// Monic minimal polynomial over Q via the first linear dependency among
// 1, a, a^2, ...; its degree divides d.
PolyQ min_poly(const NFElem& a);

// Evaluates a rational polynomial at a field element.
NFElem eval_poly_at(const PolyQ& f, const NFElem& at);

// Dense exact matrices.
using MatQ = std::vector<std::vector<Rat>>;
using MatL = std::vector<std::vector<NFElem>>;

// Exact pivoted Gaussian elimination; throws SingularSystemError.
std::vector<Rat> solve_linear_q(MatQ m, std::vector<Rat> rhs);
std::vector<NFElem> solve_linear_over_L(MatL m, std::vector<NFElem> rhs);

Rat det_q(MatQ m);
NFElem det_l(MatL m);

}  // namespace splitrec

#endif
