#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "bhdual/intmat.hpp"

namespace bhdual {

class SymmetryGroup;

// Element alpha = k/d of (Q/Z)^n with E*alpha integral; canonical residues 0 <= k_j < d.
struct GroupElement {
    const SymmetryGroup* owner = nullptr;
    std::vector<Int> k;

    bool is_identity() const;
    // coordinates on which the transformation acts trivially (lambda_i = 1)
    VarSet fixed_coordinates() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.k == b.k; }
    friend std::weak_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
        return a.k <=> b.k;
    }
};

struct DefaultCaps {
    static constexpr long group_order = 1'000'000;
    static constexpr long subgroup_enum = 512;
    static constexpr long pairs_oracle = 256;
};

// Full diagonal symmetry group G_f of an exponent matrix, order |det E|,
// enumerated via the Smith normal form of E. Immutable; hold via shared_ptr.
class SymmetryGroup {
public:
    const ExponentMatrix& exponent_matrix() const { return e_; }
    const Int& order() const { return d_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    const std::vector<GroupElement>& elements() const { return elems_; }
    std::size_t n() const { return e_.n(); }

    GroupElement identity() const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    bool contains(const GroupElement& a) const;
    // element from residues k (reduced mod d); throws ElementNotInGroup
    GroupElement element_from_k(std::vector<Int> k) const;
    // element from rationals q_j = k_j/d reduced mod 1
    GroupElement element_from_rationals(const std::vector<Rat>& q) const;
    Int element_order(const GroupElement& a) const;

private:
    friend std::shared_ptr<const SymmetryGroup>
    full_symmetry_group(const ExponentMatrix& e, long cap);

    SymmetryGroup(ExponentMatrix e, Int d) : e_(std::move(e)), d_(std::move(d)) {}

    ExponentMatrix e_;
    Int d_;
    std::vector<Int> factors_;
    std::vector<GroupElement> gens_;
    std::vector<GroupElement> elems_; // sorted lexicographically on k
};

using GroupPtr = std::shared_ptr<const SymmetryGroup>;

GroupPtr full_symmetry_group(const ExponentMatrix& e, long cap = DefaultCaps::group_order);

// Canonical sorted element set closed under the group law.
struct Subgroup {
    GroupPtr owner;
    std::vector<GroupElement> elements; // sorted, unique, contains identity

    Int order() const { return Int(elements.size()); }
    bool contains(const GroupElement& a) const;
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);

Subgroup subgroup_from_generators(GroupPtr g, const std::vector<GroupElement>& gens);

// every subgroup exactly once, canonically ordered (by order, then elements)
std::vector<Subgroup> all_subgroups(const Subgroup& g, long cap = DefaultCaps::subgroup_enum);
std::vector<Subgroup> all_subgroups(GroupPtr g, long cap = DefaultCaps::subgroup_enum);

// elements fixing every point of the torus (C*)^I: k_i = 0 for all i in I
Subgroup isotropy_subgroup(const Subgroup& g, VarSet I);
Subgroup isotropy_subgroup(GroupPtr g, VarSet I);

// greedy small generating set
std::vector<GroupElement> generating_set(const Subgroup& g);

// character pairing <beta, alpha> = beta^T * E * alpha mod 1, with beta in
// G_{f~} (matrix E^T) and alpha in G_f (matrix E); exact rational in [0, 1)
Rat pairing(const GroupElement& beta, const GroupElement& alpha);

// dual subgroup {beta in G_{f~} : <beta, h> = 0 for all h in H};
// |H| * |dual| = |G_f|
Subgroup dual_subgroup(const Subgroup& h, GroupPtr g_dual);

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

} // namespace bhdual
