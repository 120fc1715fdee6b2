#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bhdual/duality.hpp"
#include "bhdual/symmetry.hpp"

using namespace bhdual;

namespace {

GroupPtr group_of(const char* poly) {
    return full_symmetry_group(parse_polynomial(poly).matrix);
}

GroupElement elem(GroupPtr g, std::vector<Rat> q) {
    return g->element_from_rationals(q);
}

} // namespace

TEST_CASE("full symmetry group of Fermat x^2 + y^2") {
    auto g = group_of("x1^2 + x2^2");
    CHECK(g->order() == 4);
    CHECK(g->invariant_factors() == std::vector<Int>{2, 2});
    for (const auto& e : g->elements())
        CHECK(g->contains(e));
    // exactly the four half-integer vectors, as residues k/d with d = 4
    std::vector<std::vector<Int>> ks;
    for (const auto& e : g->elements())
        ks.push_back(e.k);
    std::vector<std::vector<Int>> expect{{0, 0}, {0, 2}, {2, 0}, {2, 2}}; // k/d with d = 4
    CHECK(ks == expect);
}

TEST_CASE("full symmetry group of x^3 is cyclic of order 3") {
    auto g = group_of("x1^3");
    CHECK(g->order() == 3);
    CHECK(g->invariant_factors() == std::vector<Int>{3});
    CHECK(g->elements().size() == 3);
}

TEST_CASE("full symmetry group of the chain x^2 y + y^2") {
    auto g = group_of("x1^2*x2 + x2^2");
    CHECK(g->order() == 4);
    CHECK(g->invariant_factors() == std::vector<Int>{4});
    auto gen = elem(g, {Rat(1, 4), Rat(1, 2)});
    CHECK(g->element_order(gen) == 4);
}

TEST_CASE("group order equals |det E| equals product of invariant factors") {
    for (const auto& f : generate_corpus(21, CorpusMode::Atomic, 4, 4, 25)) {
        auto g = full_symmetry_group(f.matrix);
        CHECK(Int(g->elements().size()) == f.matrix.abs_det());
        Int prod = 1;
        for (const auto& d : g->invariant_factors())
            prod *= d;
        CHECK(prod == f.matrix.abs_det());
    }
}

TEST_CASE("group order cap") {
    CHECK_THROWS_AS(full_symmetry_group(parse_polynomial("x1^7 + x2^7").matrix, 10),
                    GroupTooLarge);
}

TEST_CASE("membership checks") {
    auto g = group_of("x1^2 + x2^2");
    CHECK_THROWS_AS(g->element_from_rationals({Rat(1, 3), Rat(0)}), ElementNotInGroup);
    CHECK_THROWS_AS(g->element_from_k({Int(1), Int(1), Int(1)}), ElementNotInGroup);
    CHECK(g->element_from_k({Int(6), Int(-2)}).k == std::vector<Int>{2, 2}); // reduced mod d
}

TEST_CASE("all_subgroups counts") {
    CHECK(all_subgroups(group_of("x1^2 + x2^2")).size() == 5); // Z/2 x Z/2
    CHECK(all_subgroups(group_of("x1^2*x2 + x2^2")).size() == 3); // Z/4
    auto g1 = group_of("x1");
    CHECK(g1->order() == 1);
    CHECK(all_subgroups(g1).size() == 1);
    CHECK_THROWS_AS(all_subgroups(group_of("x1^2 + x2^2"), 2), GroupTooLarge);
}

TEST_CASE("subgroup_from_generators") {
    auto g = group_of("x1^2 + x2^2");
    auto h = subgroup_from_generators(g, {elem(g, {Rat(1, 2), Rat(1, 2)})});
    CHECK(h.order() == 2);
    CHECK(h.contains(g->identity()));

    CHECK(subgroup_from_generators(g, {}).order() == 1);

    auto g4 = group_of("x1^2*x2 + x2^2");
    CHECK(subgroup_from_generators(g4, {elem(g4, {Rat(1, 4), Rat(1, 2)})}).order() == 4);

    auto other = group_of("x1^3");
    CHECK_THROWS_AS(subgroup_from_generators(g, {other->identity()}), ElementNotInGroup);
}

TEST_CASE("isotropy subgroups") {
    auto g = group_of("x1^2 + x2^2");
    auto iso1 = isotropy_subgroup(g, 0b01);
    CHECK(iso1.order() == 2);
    for (const auto& e : iso1.elements)
        CHECK(e.k[0] == 0);

    CHECK(isotropy_subgroup(g, 0b11).order() == 1); // I = I0 is always trivial
    CHECK(isotropy_subgroup(g, 0).order() == g->order());

    for (const auto& f : generate_corpus(5, CorpusMode::Atomic, 4, 4, 10))
        CHECK(isotropy_subgroup(full_symmetry_group(f.matrix), full_set(f.n())).order() == 1);
}

TEST_CASE("pairing values on x^2 + y^2") {
    auto g = group_of("x1^2 + x2^2");
    auto gt = full_symmetry_group(parse_polynomial("x1^2 + x2^2").matrix.transposed());
    auto beta = gt->element_from_rationals({Rat(1, 2), Rat(0)});
    auto alpha = elem(g, {Rat(1, 2), Rat(0)});
    CHECK(pairing(beta, alpha) == Rat(1, 2));
    for (const auto& a : g->elements())
        CHECK(pairing(gt->identity(), a) == 0);
}

TEST_CASE("pairing rejects unrelated groups") {
    auto g = group_of("x1^2 + x2^2");
    auto other = group_of("x1^4 + x2^2");
    CHECK_THROWS_AS(pairing(other->identity(), g->identity()), MismatchedMatrices);
}

TEST_CASE("pairing is bilinear and non-degenerate") {
    for (const char* poly : {"x1^2 + x2^2", "x1^2*x2 + x2^2", "x1^3*x2 + x2^2*x3 + x3^3"}) {
        auto f = parse_polynomial(poly);
        auto g = full_symmetry_group(f.matrix);
        auto gt = full_symmetry_group(f.matrix.transposed());
        for (const auto& b : gt->elements())
            for (const auto& a1 : g->elements())
                for (const auto& a2 : g->elements()) {
                    Rat lhs = pairing(b, g->add(a1, a2));
                    Rat rhs = pairing(b, a1) + pairing(b, a2);
                    if (rhs >= 1) // reduce mod 1
                        rhs -= 1;
                    CHECK(lhs == rhs);
                }
        for (const auto& b : gt->elements()) {
            bool all_zero = true;
            for (const auto& a : g->elements())
                if (pairing(b, a) != 0)
                    all_zero = false;
            CHECK(all_zero == b.is_identity());
        }
    }
}

TEST_CASE("non-degenerate pairing of generators on the cyclic chain group") {
    auto f = parse_polynomial("x1^2*x2 + x2^2");
    auto g = full_symmetry_group(f.matrix);
    auto gt = full_symmetry_group(f.matrix.transposed());
    Rat q = pairing(gt->generators()[0], g->generators()[0]);
    CHECK(denominator(q) == 4); // exact order 4 in Q/Z
}

TEST_CASE("dual subgroup basics") {
    auto f = parse_polynomial("x1^2 + x2^2");
    auto g = full_symmetry_group(f.matrix);
    auto gt = full_symmetry_group(f.matrix.transposed());

    CHECK(dual_subgroup(full_subgroup(g), gt).order() == 1);
    CHECK(dual_subgroup(trivial_subgroup(g), gt).order() == gt->order());

    auto diag = subgroup_from_generators(g, {g->element_from_rationals({Rat(1, 2), Rat(1, 2)})});
    auto dual = dual_subgroup(diag, gt);
    CHECK(dual.order() == 2);
    CHECK(dual.elements[1].k == std::vector<Int>{2, 2}); // self-dual diagonal, d = 4
}

TEST_CASE("double dual, order identity, and sum/intersection duality") {
    for (const auto& f : generate_corpus(9, CorpusMode::Atomic, 3, 4, 12)) {
        auto g = full_symmetry_group(f.matrix);
        if (g->order() > 64)
            continue;
        auto gt = full_symmetry_group(f.matrix.transposed());
        auto subs = all_subgroups(g);
        for (const auto& h : subs) {
            auto dual = dual_subgroup(h, gt);
            CHECK(h.order() * dual.order() == g->order());
            auto ddual = dual_subgroup(dual, g);
            CHECK(ddual.elements == h.elements);
        }
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i; j < subs.size(); ++j) {
                auto lhs = dual_subgroup(subgroup_sum(subs[i], subs[j]), gt);
                auto rhs = subgroup_intersection(dual_subgroup(subs[i], gt),
                                                 dual_subgroup(subs[j], gt));
                CHECK(lhs.elements == rhs.elements);
            }
    }
}

TEST_CASE("sum and intersection") {
    auto g = group_of("x1^2 + x2^2");
    auto a = subgroup_from_generators(g, {elem(g, {Rat(0), Rat(1, 2)})});
    auto b = subgroup_from_generators(g, {elem(g, {Rat(1, 2), Rat(0)})});
    CHECK(subgroup_sum(a, b).order() == 4);
    CHECK(subgroup_intersection(a, b).order() == 1);
    CHECK(subgroup_sum(a, trivial_subgroup(g)).elements == a.elements);
    CHECK(subgroup_intersection(a, a).elements == a.elements);

    auto other = group_of("x1^3");
    CHECK_THROWS_AS(subgroup_sum(a, trivial_subgroup(other)), MismatchedOwners);
}

TEST_CASE("isotropy commutes with passing to subgroups") {
    for (const auto& f : generate_corpus(13, CorpusMode::Atomic, 3, 4, 8)) {
        auto g = full_symmetry_group(f.matrix);
        if (g->order() > 64)
            continue;
        for (const auto& h : all_subgroups(g))
            for (VarSet I = 0; I <= full_set(f.n()); ++I) {
                auto lhs = subgroup_intersection(isotropy_subgroup(g, I), h);
                auto rhs = isotropy_subgroup(h, I);
                CHECK(lhs.elements == rhs.elements);
            }
    }
}
