#ifndef SPLITREC_FACTOR_MODP_HPP
#define SPLITREC_FACTOR_MODP_HPP

#include <utility>
#include <vector>

#include "splitrec/poly.hpp"

namespace splitrec {

// Factorization toolbox over F_p[x]: squarefree decomposition (handles p-th
// powers), distinct-degree factorization, and equal-degree splitting.
// Cantor-Zassenhaus randomness is seeded deterministically from (p, poly);
// for p < 17 equal-degree splitting falls back to exhaustive search, which
// also covers characteristic 2.

struct FactorExp {
    PolyModP factor;  // monic irreducible
    unsigned multiplicity;
};

// (squarefree monic part, multiplicity) pairs with distinct parts.
std::vector<std::pair<PolyModP, unsigned>> squarefree_decomposition(const PolyModP& f);

// For monic squarefree f: (degree k, product of all irreducible factors of
// degree k), ascending k, trivial entries omitted.
std::vector<std::pair<int, PolyModP>> distinct_degree_factor(const PolyModP& f);

// Splits a monic product of irreducibles all of degree k.
std::vector<PolyModP> equal_degree_factor(const PolyModP& f, int k);

// Complete factorization of a nonconstant f; factors monic irreducible,
// sorted by (degree, coefficients) for reproducibility.
std::vector<FactorExp> factor_modp(const PolyModP& f);

// Distinct roots of f in F_p, ascending.
std::vector<Int> roots_modp(const PolyModP& f);

}  // namespace splitrec

#endif
