#include "bhdual/euler.hpp"

#include <algorithm>
#include <map>

namespace bhdual {

namespace {

Int isotropy_order(const std::vector<GroupElement>& elems, VarSet I) {
    Int count = 0;
    for (const auto& e : elems) {
        bool fixes = true;
        for (std::size_t i = 0; i < e.k.size() && fixes; ++i)
            if (in_set(I, i) && e.k[i] != 0)
                fixes = false;
        if (fixes)
            ++count;
    }
    return count;
}

int stratum_sign(VarSet I) {
    return popcount(I) % 2 == 1 ? 1 : -1; // (-1)^(|I|-1)
}

Int exact_div(const Int& a, const Int& b, const char* what) {
    if (b == 0 || a % b != 0)
        throw NonIntegralResult(std::string(what) + ": " + a.str() + " not divisible by " +
                                b.str());
    return a / b;
}

} // namespace

Int stratum_euler(const InvertiblePolynomial& f, const SymmetryGroup& gf, VarSet I) {
    if (I == 0)
        return 0;
    auto rows = rows_supported_in(f, I);
    if (static_cast<int>(rows.size()) != popcount(I))
        return 0;
    Int iso = isotropy_order(gf.elements(), I);
    if (gf.order() % iso != 0)
        throw InternalCheckFailure("isotropy order does not divide |G_f|");
    Int chi = stratum_sign(I) * (gf.order() / iso);

    // second route through the block determinant
    Int det_i = determinant(f.matrix.matrix().submatrix(rows, I));
    Int chi2 = stratum_sign(I) * (det_i < 0 ? Int(-det_i) : det_i);
    if (chi != chi2)
        throw InternalCheckFailure("stratum chi mismatch between isotropy and det routes");
    return chi;
}

Int stratum_euler(const InvertiblePolynomial& f, VarSet I, long cap) {
    return stratum_euler(f, *full_symmetry_group(f.matrix, cap), I);
}

Int milnor_fibre_euler(const InvertiblePolynomial& f, const SymmetryGroup& gf) {
    Int total = 0;
    for (VarSet I = 1; I <= full_set(f.n()); ++I)
        total += stratum_euler(f, gf, I);
    return total;
}

Int milnor_fibre_euler(const InvertiblePolynomial& f, long cap) {
    return milnor_fibre_euler(f, *full_symmetry_group(f.matrix, cap));
}

OrbifoldEulerReport orbifold_euler_strata(const InvertiblePolynomial& f, const Subgroup& g) {
    const SymmetryGroup& gf = *g.owner;
    const std::size_t n = f.n();
    OrbifoldEulerReport rep;
    rep.group_order = g.order();
    rep.method = "strata";
    Rat total = 0;
    for (VarSet I = 0; I <= full_set(n); ++I) {
        StratumReport s;
        s.I = I;
        s.supported_rows = rows_supported_in(f, I);
        s.chi_stratum = stratum_euler(f, gf, I);
        s.isotropy_order_in_G = isotropy_order(g.elements, I);
        s.contribution = Rat(s.chi_stratum * s.isotropy_order_in_G * s.isotropy_order_in_G);
        total += s.contribution;
        rep.strata.push_back(std::move(s));
    }
    if (denominator(total) != 1)
        throw InternalCheckFailure("stratum contributions are not integral");
    rep.chi_orb = exact_div(numerator(total), g.order(), "chi(V,G)");
    rep.chi_reduced = rep.chi_orb - g.order();
    rep.orbifold_milnor = (n % 2 == 1 ? rep.chi_reduced : Int(-rep.chi_reduced));
    return rep;
}

OrbifoldEulerReport orbifold_euler_pairs(const InvertiblePolynomial& f, const Subgroup& g,
                                         long cap) {
    if (g.order() > cap)
        throw GroupTooLarge("pairs oracle over a group of order " + g.order().str() +
                            " exceeds cap " + std::to_string(cap));
    const SymmetryGroup& gf = *g.owner;
    const std::size_t n = f.n();
    const VarSet all = full_set(n);

    // chi(V_f intersect C^J) = sum of stratum chis over nonempty I inside J
    std::vector<Int> closed(all + 1);
    for (VarSet I = 1; I <= all; ++I)
        closed[I] = stratum_euler(f, gf, I);
    for (std::size_t b = 0; b < n; ++b)
        for (VarSet J = 0; J <= all; ++J)
            if (in_set(J, b))
                closed[J] += closed[J & ~(VarSet(1) << b)];

    // group elements by the coordinate set they fix
    std::map<VarSet, Int> fixed_count;
    for (const auto& e : g.elements)
        ++fixed_count[e.fixed_coordinates()];

    // every pair commutes (G abelian); <g,h> fixes exactly C^(Jg & Jh)
    Int total = 0;
    for (const auto& [ja, ca] : fixed_count)
        for (const auto& [jb, cb] : fixed_count)
            total += ca * cb * closed[ja & jb];

    OrbifoldEulerReport rep;
    rep.group_order = g.order();
    rep.method = "pairs";
    rep.chi_orb = exact_div(total, g.order(), "chi(V,G) over pairs");
    rep.chi_reduced = rep.chi_orb - g.order();
    rep.orbifold_milnor = (n % 2 == 1 ? rep.chi_reduced : Int(-rep.chi_reduced));
    return rep;
}

Int orbifold_milnor_number(const InvertiblePolynomial& f, const Subgroup& g) {
    return orbifold_euler_strata(f, g).orbifold_milnor;
}

Rat orbi_summand(const InvertiblePolynomial& f, const Subgroup& g, VarSet I) {
    Int chi = stratum_euler(f, *g.owner, I);
    Int iso = isotropy_order(g.elements, I);
    return Rat(chi * iso * iso, g.order());
}

} // namespace bhdual
