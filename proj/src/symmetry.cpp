#include "bhdual/symmetry.hpp"

#include <algorithm>
#include <set>

namespace bhdual {

namespace {

Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

// beta^T * E * alpha as an integer numerator over d^2
Int pairing_numerator(const GroupElement& beta, const GroupElement& alpha) {
    if (!beta.owner || !alpha.owner)
        throw Error("unowned group element");
    const IntMatrix& e = alpha.owner->exponent_matrix().matrix();
    if (beta.owner->exponent_matrix().matrix() != e.transposed())
        throw MismatchedMatrices("pairing requires transpose-related symmetry groups");
    Int s = 0;
    for (std::size_t i = 0; i < e.rows(); ++i) {
        if (beta.k[i] == 0)
            continue;
        Int row = 0;
        for (std::size_t j = 0; j < e.cols(); ++j)
            row += e(i, j) * alpha.k[j];
        s += beta.k[i] * row;
    }
    return s;
}

} // namespace

bool GroupElement::is_identity() const {
    return std::all_of(k.begin(), k.end(), [](const Int& v) { return v == 0; });
}

VarSet GroupElement::fixed_coordinates() const {
    VarSet s = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] == 0)
            s |= VarSet(1) << i;
    return s;
}

GroupElement SymmetryGroup::identity() const {
    return GroupElement{this, std::vector<Int>(n(), Int(0))};
}

GroupElement SymmetryGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r{this, std::vector<Int>(n())};
    for (std::size_t j = 0; j < n(); ++j)
        r.k[j] = mod(a.k[j] + b.k[j], d_);
    return r;
}

GroupElement SymmetryGroup::negate(const GroupElement& a) const {
    GroupElement r{this, std::vector<Int>(n())};
    for (std::size_t j = 0; j < n(); ++j)
        r.k[j] = mod(-a.k[j], d_);
    return r;
}

bool SymmetryGroup::contains(const GroupElement& a) const {
    if (a.k.size() != n())
        return false;
    for (std::size_t i = 0; i < n(); ++i) {
        Int row = 0;
        for (std::size_t j = 0; j < n(); ++j)
            row += e_.entry(i, j) * a.k[j];
        if (row % d_ != 0)
            return false;
    }
    return true;
}

GroupElement SymmetryGroup::element_from_k(std::vector<Int> k) const {
    if (k.size() != n())
        throw ElementNotInGroup("element has wrong dimension");
    for (auto& v : k)
        v = mod(v, d_);
    GroupElement g{this, std::move(k)};
    if (!contains(g))
        throw ElementNotInGroup("vector does not satisfy E*k = 0 mod d");
    return g;
}

GroupElement SymmetryGroup::element_from_rationals(const std::vector<Rat>& q) const {
    if (q.size() != n())
        throw ElementNotInGroup("element has wrong dimension");
    std::vector<Int> k(n());
    for (std::size_t j = 0; j < n(); ++j) {
        Rat v = q[j] * d_;
        if (denominator(v) != 1)
            throw ElementNotInGroup("coordinate is not a multiple of 1/d");
        k[j] = numerator(v);
    }
    return element_from_k(std::move(k));
}

Int SymmetryGroup::element_order(const GroupElement& a) const {
    Int ord = 1;
    GroupElement cur = a;
    while (!cur.is_identity()) {
        cur = add(cur, a);
        ++ord;
    }
    return ord;
}

GroupPtr full_symmetry_group(const ExponentMatrix& e, long cap) {
    Int d = e.abs_det();
    if (d > cap)
        throw GroupTooLarge("group order " + d.str() + " exceeds cap " + std::to_string(cap));

    auto g = std::shared_ptr<SymmetryGroup>(new SymmetryGroup(e, d));
    const std::size_t n = e.n();
    SmithDecomposition snf = smith_normal_form(e.matrix());
    g->factors_ = snf.invariant_factors();

    // generators g_i = (column i of V) / d_i mod Z^n, one per nontrivial factor
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = snf.d(i, i);
        if (di == 1)
            continue;
        std::vector<Int> k(n);
        Int scale = d / di;
        for (std::size_t j = 0; j < n; ++j)
            k[j] = mod(snf.v(j, i) * scale, d);
        g->gens_.push_back(GroupElement{g.get(), std::move(k)});
    }

    std::vector<GroupElement> elems{g->identity()};
    for (std::size_t gi = 0; gi < g->gens_.size(); ++gi) {
        const Int& di = g->factors_[gi];
        std::vector<GroupElement> next;
        GroupElement step = g->identity();
        for (Int c = 0; c < di; ++c) {
            for (const auto& e0 : elems)
                next.push_back(g->add(e0, step));
            step = g->add(step, g->gens_[gi]);
        }
        elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());

    if (Int(elems.size()) != d ||
        std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw InternalCheckFailure("symmetry group enumeration does not match |det E|");
    for (const auto& el : elems)
        if (!g->contains(el))
            throw InternalCheckFailure("enumerated element violates E*k = 0 mod d");
    g->elems_ = std::move(elems);
    return g;
}

bool Subgroup::contains(const GroupElement& a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
}

Subgroup trivial_subgroup(GroupPtr g) {
    return Subgroup{g, {g->identity()}};
}

Subgroup full_subgroup(GroupPtr g) {
    return Subgroup{g, g->elements()};
}

Subgroup subgroup_from_generators(GroupPtr g, const std::vector<GroupElement>& gens) {
    for (const auto& e : gens)
        if (!g->contains(e))
            throw ElementNotInGroup("generator is not an element of the group");
    std::set<GroupElement> closure{g->identity()};
    std::vector<GroupElement> work(closure.begin(), closure.end());
    while (!work.empty()) {
        GroupElement cur = work.back();
        work.pop_back();
        for (const auto& gen : gens) {
            GroupElement nxt = g->add(cur, gen);
            if (closure.insert(nxt).second)
                work.push_back(nxt);
        }
    }
    return Subgroup{g, {closure.begin(), closure.end()}};
}

namespace {

// S + <g>, both inside the same group
std::vector<GroupElement> extend_by(const SymmetryGroup& g,
                                    const std::vector<GroupElement>& s,
                                    const GroupElement& x) {
    std::set<GroupElement> out(s.begin(), s.end());
    GroupElement step = x;
    while (!step.is_identity()) {
        for (const auto& e : s)
            out.insert(g.add(e, step));
        step = g.add(step, x);
    }
    return {out.begin(), out.end()};
}

} // namespace

std::vector<Subgroup> all_subgroups(const Subgroup& g, long cap) {
    if (g.order() > cap)
        throw GroupTooLarge("subgroup enumeration over a group of order " +
                            g.order().str() + " exceeds cap " + std::to_string(cap));
    const SymmetryGroup& owner = *g.owner;
    std::set<std::vector<GroupElement>> seen;
    std::vector<std::vector<GroupElement>> work;
    std::vector<GroupElement> trivial{owner.identity()};
    seen.insert(trivial);
    work.push_back(trivial);
    while (!work.empty()) {
        auto s = std::move(work.back());
        work.pop_back();
        for (const auto& x : g.elements) {
            if (std::binary_search(s.begin(), s.end(), x))
                continue;
            auto t = extend_by(owner, s, x);
            if (seen.insert(t).second)
                work.push_back(std::move(t));
        }
    }
    std::vector<Subgroup> out;
    for (const auto& s : seen)
        out.push_back(Subgroup{g.owner, s});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<Subgroup> all_subgroups(GroupPtr g, long cap) {
    return all_subgroups(full_subgroup(g), cap);
}

Subgroup isotropy_subgroup(const Subgroup& g, VarSet I) {
    std::vector<GroupElement> out;
    for (const auto& e : g.elements) {
        bool fixes = true;
        for (std::size_t i = 0; i < e.k.size() && fixes; ++i)
            if (in_set(I, i) && e.k[i] != 0)
                fixes = false;
        if (fixes)
            out.push_back(e);
    }
    return Subgroup{g.owner, std::move(out)};
}

Subgroup isotropy_subgroup(GroupPtr g, VarSet I) {
    return isotropy_subgroup(full_subgroup(g), I);
}

std::vector<GroupElement> generating_set(const Subgroup& g) {
    std::vector<GroupElement> gens;
    Subgroup span = trivial_subgroup(g.owner);
    for (const auto& e : g.elements) {
        if (span.contains(e))
            continue;
        gens.push_back(e);
        span = subgroup_from_generators(g.owner, gens);
        if (span.order() == g.order())
            break;
    }
    return gens;
}

Rat pairing(const GroupElement& beta, const GroupElement& alpha) {
    Int d = alpha.owner->order();
    Int num = mod(pairing_numerator(beta, alpha), d * d);
    return Rat(num, d * d);
}

Subgroup dual_subgroup(const Subgroup& h, GroupPtr g_dual) {
    const SymmetryGroup& owner = *h.owner;
    if (g_dual->exponent_matrix().matrix() != owner.exponent_matrix().matrix().transposed())
        throw MismatchedMatrices("dual group must belong to the transposed matrix");
    std::vector<GroupElement> gens = generating_set(h);
    Int dd = owner.order() * owner.order();
    std::vector<GroupElement> out;
    for (const auto& beta : g_dual->elements()) {
        bool annihilates = true;
        for (const auto& gen : gens)
            if (pairing_numerator(beta, gen) % dd != 0) {
                annihilates = false;
                break;
            }
        if (annihilates)
            out.push_back(beta);
    }
    Subgroup dual{g_dual, std::move(out)};
    if (h.order() * dual.order() != owner.order())
        throw InternalCheckFailure("|H| * |dual H| != |G_f|");
    return dual;
}

namespace {

void require_same_owner(const Subgroup& a, const Subgroup& b) {
    if (a.owner != b.owner &&
        a.owner->exponent_matrix().matrix() != b.owner->exponent_matrix().matrix())
        throw MismatchedOwners("subgroups live in different symmetry groups");
}

} // namespace

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
    require_same_owner(a, b);
    std::set<GroupElement> out;
    for (const auto& x : a.elements)
        for (const auto& y : b.elements)
            out.insert(a.owner->add(x, y));
    return Subgroup{a.owner, {out.begin(), out.end()}};
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
    require_same_owner(a, b);
    std::vector<GroupElement> out;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(out));
    return Subgroup{a.owner, std::move(out)};
}

} // namespace bhdual
