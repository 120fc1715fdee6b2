#include "bhdual/duality.hpp"

#include <algorithm>
#include <optional>
#include <functional>
#include <random>

namespace bhdual {

InvertiblePolynomial transpose(const InvertiblePolynomial& f) {
    return InvertiblePolynomial{f.matrix.transposed(), f.variable_names, f.coefficients};
}

DualPair dual_pair(const InvertiblePolynomial& f, const Subgroup& g) {
    DualPair p{f, transpose(f), g.owner, nullptr, g, {}};
    long d_cap = g.owner->order().convert_to<long>();
    p.gf_dual = full_symmetry_group(p.f_dual.matrix, d_cap);
    p.g_dual = dual_subgroup(g, p.gf_dual);
    return p;
}

VerificationReport verify_theorem(const InvertiblePolynomial& f, const Subgroup& g,
                                  long pairs_cap) {
    DualPair pair = dual_pair(f, g);
    OrbifoldEulerReport side_f = orbifold_euler_strata(f, g);
    OrbifoldEulerReport side_dual = orbifold_euler_strata(pair.f_dual, pair.g_dual);
    int sign = f.n() % 2 == 0 ? 1 : -1;
    bool holds = side_dual.chi_reduced == sign * side_f.chi_reduced;
    VerificationReport r{std::move(pair),   side_f.chi_reduced, side_dual.chi_reduced,
                         sign,              holds,              std::move(side_f),
                         std::move(side_dual)};
    if (g.order() <= pairs_cap) {
        r.oracle_checked_f = true;
        auto oracle = orbifold_euler_pairs(f, g, pairs_cap);
        if (oracle.chi_orb != r.side_f.chi_orb)
            r.oracle_agrees = false;
    }
    if (r.pair.g_dual.order() <= pairs_cap) {
        r.oracle_checked_dual = true;
        auto oracle = orbifold_euler_pairs(r.pair.f_dual, r.pair.g_dual, pairs_cap);
        if (oracle.chi_orb != r.side_dual.chi_orb)
            r.oracle_agrees = false;
    }
    return r;
}

bool verify_isotropy_lemma(const InvertiblePolynomial& f, VarSet I, long cap) {
    auto rows = rows_supported_in(f, I);
    if (static_cast<int>(rows.size()) != popcount(I))
        throw CriterionNotMet("I is not block-compatible: |supp f & Z^I| != |I|");
    const std::size_t n = f.n();
    GroupPtr gf = full_symmetry_group(f.matrix, cap);
    GroupPtr gft = full_symmetry_group(f.matrix.transposed(), cap);
    Subgroup iso_f = isotropy_subgroup(gf, I);
    // coordinates of G_{f~} are indexed by the monomials of f, so the
    // complementary torus is cut out by the non-supported rows, not by I itself
    Subgroup iso_ft = isotropy_subgroup(gft, complement(to_varset(rows), n));
    Subgroup dual_iso = dual_subgroup(iso_f, gft);
    bool subgroups_equal = iso_ft.elements == dual_iso.elements;
    bool orders_ok = iso_f.order() * iso_ft.order() == gf->order();
    return subgroups_equal && orders_ok;
}

namespace {

struct RowShape {
    std::size_t head;
    std::optional<std::size_t> tail;
    Int exponent;
};

// candidate (head, tail) readings of one exponent row
std::vector<RowShape> row_shapes(const IntMatrix& e, std::size_t i) {
    std::vector<std::pair<std::size_t, Int>> nz;
    for (std::size_t j = 0; j < e.cols(); ++j)
        if (e(i, j) != 0)
            nz.emplace_back(j, e(i, j));
    std::vector<RowShape> out;
    if (nz.size() == 1) {
        out.push_back({nz[0].first, std::nullopt, nz[0].second});
    } else if (nz.size() == 2) {
        if (nz[1].second == 1)
            out.push_back({nz[0].first, nz[1].first, nz[0].second});
        if (nz[0].second == 1)
            out.push_back({nz[1].first, nz[0].first, nz[1].second});
    }
    return out;
}

struct Assignment {
    std::vector<std::optional<std::size_t>> tail; // per head variable
    std::vector<Int> exponent;                    // per head variable
};

std::optional<std::vector<AtomicBlock>> blocks_from(const Assignment& a, std::size_t n) {
    std::vector<int> indeg(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (a.tail[v]) {
            if (*a.tail[v] == v)
                return std::nullopt;
            if (++indeg[*a.tail[v]] > 1)
                return std::nullopt;
        }
    std::vector<AtomicBlock> blocks;
    std::vector<bool> visited(n, false);
    // paths start at in-degree-0 vertices; length 1 is a Fermat block
    for (std::size_t v = 0; v < n; ++v) {
        if (indeg[v] != 0)
            continue;
        AtomicBlock b;
        std::size_t cur = v;
        for (;;) {
            visited[cur] = true;
            b.variables.push_back(cur);
            b.exponents.push_back(a.exponent[cur]);
            if (!a.tail[cur])
                break;
            cur = *a.tail[cur];
        }
        b.kind = b.variables.size() == 1 ? BlockKind::Fermat : BlockKind::Chain;
        blocks.push_back(std::move(b));
    }
    // what remains decomposes into cycles
    for (std::size_t v = 0; v < n; ++v) {
        if (visited[v])
            continue;
        AtomicBlock b;
        b.kind = BlockKind::Loop;
        std::size_t cur = v;
        do {
            if (!a.tail[cur])
                return std::nullopt; // path fragment inside a "cycle"
            visited[cur] = true;
            b.variables.push_back(cur);
            b.exponents.push_back(a.exponent[cur]);
            cur = *a.tail[cur];
        } while (cur != v);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

} // namespace

AtomicDecomposition classify_atomic(const InvertiblePolynomial& f) {
    const std::size_t n = f.n();
    std::vector<std::vector<RowShape>> shapes;
    for (std::size_t i = 0; i < n; ++i) {
        shapes.push_back(row_shapes(f.matrix.matrix(), i));
        if (shapes.back().empty())
            return {{}, Nondegeneracy::NotDecomposable};
    }
    // try head assignments until one yields a valid path/cycle structure
    std::vector<bool> used(n, false);
    Assignment a{std::vector<std::optional<std::size_t>>(n), std::vector<Int>(n)};
    std::optional<std::vector<AtomicBlock>> blocks;
    std::function<bool(std::size_t)> search = [&](std::size_t row) {
        if (row == n) {
            blocks = blocks_from(a, n);
            return blocks.has_value();
        }
        for (const RowShape& s : shapes[row]) {
            if (used[s.head])
                continue;
            used[s.head] = true;
            a.tail[s.head] = s.tail;
            a.exponent[s.head] = s.exponent;
            if (search(row + 1))
                return true;
            used[s.head] = false;
        }
        return false;
    };
    if (!search(0))
        return {{}, Nondegeneracy::NotDecomposable};

    bool all_ge2 = true;
    for (const auto& b : *blocks)
        for (const auto& e : b.exponents)
            if (e < 2)
                all_ge2 = false;
    Nondegeneracy verdict = all_ge2 && weights(f).all_positive
                                ? Nondegeneracy::ConfirmedNondegenerate
                                : Nondegeneracy::Unknown;
    return {std::move(*blocks), verdict};
}

namespace {

std::uint64_t randint(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1); // inclusive; modulo bias is irrelevant here
}

IntMatrix atomic_matrix(std::mt19937_64& rng, std::size_t n_max, long exp_max) {
    std::size_t n = randint(rng, 1, n_max);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[randint(rng, 0, i - 1)]);

    IntMatrix e(n, n);
    std::size_t row = 0, pos = 0;
    while (pos < n) {
        std::size_t remaining = n - pos;
        std::size_t b = randint(rng, 1, std::min<std::size_t>(remaining, 4));
        bool loop = b >= 2 && randint(rng, 0, 1) == 1;
        for (std::size_t t = 0; t < b; ++t) {
            std::size_t head = perm[pos + t];
            e(row, head) = Int(randint(rng, 2, exp_max));
            if (t + 1 < b)
                e(row, perm[pos + t + 1]) = 1;
            else if (loop)
                e(row, perm[pos]) = 1;
            ++row;
        }
        pos += b;
    }
    // monomial order carries no information; shuffle it anyway
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = randint(rng, 0, i - 1);
        for (std::size_t c = 0; c < n; ++c)
            std::swap(e(i - 1, c), e(j, c));
    }
    return e;
}

IntMatrix sparse_matrix(std::mt19937_64& rng, std::size_t n_max, long exp_max) {
    std::size_t n = randint(rng, 1, n_max);
    IntMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                e(i, j) = Int(randint(rng, 1, exp_max));
            } else {
                std::uint64_t r = randint(rng, 0, 7);
                e(i, j) = r == 6 ? 1 : r == 7 ? std::min<long>(2, exp_max) : 0;
            }
        }
    return e;
}

} // namespace

std::vector<InvertiblePolynomial> generate_corpus(std::uint64_t seed, CorpusMode mode,
                                                  std::size_t n_max, long exp_max,
                                                  std::size_t count) {
    if (n_max < 1 || exp_max < 2)
        throw Error("generate_corpus requires n_max >= 1 and exp_max >= 2");
    std::mt19937_64 rng(seed);
    std::vector<InvertiblePolynomial> out;
    while (out.size() < count) {
        IntMatrix m = mode == CorpusMode::Atomic ? atomic_matrix(rng, n_max, exp_max)
                                                 : sparse_matrix(rng, n_max, exp_max);
        try {
            out.push_back(polynomial_from_matrix(ExponentMatrix(std::move(m))));
        } catch (const Error&) {
            // sparse mode rejection sampling (det = 0 or duplicate rows)
        }
    }
    return out;
}

} // namespace bhdual
