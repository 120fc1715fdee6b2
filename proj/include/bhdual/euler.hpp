#pragma once

#include <string>
#include <vector>

#include "bhdual/symmetry.hpp"

namespace bhdual {

struct StratumReport {
    VarSet I = 0;
    std::vector<std::size_t> supported_rows;
    Int chi_stratum;         // chi(V_f intersect (C*)^I)
    Int isotropy_order_in_G; // |G_f^I intersect G|
    Rat contribution;        // chi_stratum * isotropy_order^2, before the 1/|G| division
};

struct OrbifoldEulerReport {
    Int group_order;
    std::vector<StratumReport> strata;
    Int chi_orb;
    Int chi_reduced;     // chi_orb - |G|
    Int orbifold_milnor; // (-1)^(n-1) * chi_reduced
    std::string method;  // "strata" or "pairs"
};

// chi of the open stratum V_f intersect (C*)^I: zero unless exactly |I|
// monomials are supported in I, otherwise (-1)^(|I|-1) * |G_f| / |G_f^I|,
// cross-checked against (-1)^(|I|-1) * |det E_I|.
Int stratum_euler(const InvertiblePolynomial& f, const SymmetryGroup& gf, VarSet I);

// convenience overload building the symmetry group internally
Int stratum_euler(const InvertiblePolynomial& f, VarSet I,
                  long cap = DefaultCaps::group_order);

// chi(V_f) by additivity over the torus strata
Int milnor_fibre_euler(const InvertiblePolynomial& f, const SymmetryGroup& gf);
Int milnor_fibre_euler(const InvertiblePolynomial& f, long cap = DefaultCaps::group_order);

// chi(V_f, G) = (1/|G|) * sum over strata of chi_I * |G_f^I intersect G|^2
OrbifoldEulerReport orbifold_euler_strata(const InvertiblePolynomial& f, const Subgroup& g);

// direct evaluation over commuting pairs (g, h); independent of the strata route
OrbifoldEulerReport orbifold_euler_pairs(const InvertiblePolynomial& f, const Subgroup& g,
                                         long cap = DefaultCaps::pairs_oracle);

Int orbifold_milnor_number(const InvertiblePolynomial& f, const Subgroup& g);

// single I-summand of the strata formula: chi_I * |G_f^I intersect G|^2 / |G|
Rat orbi_summand(const InvertiblePolynomial& f, const Subgroup& g, VarSet I);

} // namespace bhdual
