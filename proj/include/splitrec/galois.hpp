#ifndef SPLITREC_GALOIS_HPP
#define SPLITREC_GALOIS_HPP

#include <vector>

#include "splitrec/number_field.hpp"

namespace splitrec {

// Automorphism of L/Q, stored as σ(θ). Certified at construction:
// f(σ(θ)) = 0 exactly over Q, which makes θ ↦ σ(θ) a ring homomorphism.
class Automorphism {
public:
    explicit Automorphism(NFElem image_of_generator);

    const NFElem& image() const { return image_; }
    NFElem apply(const NFElem& a) const;
    bool is_identity() const;

private:
    NFElem image_;
};

struct GaloisGroup {
    FieldPtr field;
    std::vector<Automorphism> elements;        // elements[0] is the identity
    std::vector<std::vector<int>> mult_table;  // mult_table[i][j] = index of elements[i]∘elements[j]
    std::vector<int> inverse;                  // index of each element's inverse

    std::vector<std::vector<int>> conjugacy_classes;  // sorted; class of identity first;
                                                      // representative = least index
    std::vector<int> class_reps;
    std::vector<int> centralizer_sizes;  // per representative

    int order() const { return static_cast<int>(elements.size()); }
    int compose(int i, int j) const { return mult_table[i][j]; }
    // index of the conjugacy class containing element e
    int class_of(int e) const;
};

// Discovers Gal(L/Q) as explicit automorphisms via a fully split prime,
// Hensel lifting, permutation search over root images with rational
// reconstruction, and exact certification. Throws NotGaloisError when fewer
// than d automorphisms exist (and NotIrreducibleError when the search exposes
// a reducible defining polynomial). Built-in search requires d <= 8;
// larger degrees must supply automorphisms (make_group_from_images).
GaloisGroup discover_automorphisms(const FieldPtr& field);

// Builds and certifies a group from caller-supplied σ(θ) coordinate vectors.
GaloisGroup make_group_from_images(const FieldPtr& field, const std::vector<std::vector<Rat>>& images);

bool is_normal_element(const NFElem& a, const GaloisGroup& group);

// Deterministic scan of integer coordinate boxes by ascending max-norm shell;
// returns the first element passing is_normal_element with min_poly of full
// degree.
NFElem find_normal_element(const FieldPtr& field, const GaloisGroup& group);

struct RebasedField {
    FieldPtr field;                 // Q[y]/(min poly of the rescaled normal element)
    GaloisGroup group;              // transported, same element order
    std::vector<NFElem> conjugates; // τ_j(α) in the new presentation, τ_1 = id
    Int scale;                      // new generator = scale · α
};

// Re-presents L with a normal element a as primitive generator (after integral
// rescaling y = N·a) and transports the group.
RebasedField rebase_to_normal(const FieldPtr& field, const GaloisGroup& group, const NFElem& a);

}  // namespace splitrec

#endif
