#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhdual/euler.hpp"

namespace bhdual {

// f with exponent matrix E^T; an involution
InvertiblePolynomial transpose(const InvertiblePolynomial& f);

struct DualPair {
    InvertiblePolynomial f;
    InvertiblePolynomial f_dual;
    GroupPtr gf;      // full symmetry group of f
    GroupPtr gf_dual; // full symmetry group of f_dual
    Subgroup g;       // subgroup of gf
    Subgroup g_dual;  // its dual inside gf_dual
};

DualPair dual_pair(const InvertiblePolynomial& f, const Subgroup& g);

struct VerificationReport {
    DualPair pair;
    Int chi_reduced_f;
    Int chi_reduced_dual;
    int sign; // (-1)^n
    bool theorem_holds;
    OrbifoldEulerReport side_f;
    OrbifoldEulerReport side_dual;
    // pairs-definition oracle, run on each side when |G| is within cap
    bool oracle_checked_f = false;
    bool oracle_checked_dual = false;
    bool oracle_agrees = true;
};

VerificationReport verify_theorem(const InvertiblePolynomial& f, const Subgroup& g,
                                  long pairs_cap = DefaultCaps::pairs_oracle);

// Lemma-1 style check on a block-compatible I: the isotropy subgroup of the
// complementary torus on the transposed side equals the dual of G_f^I, and
// |G_f^I| * |G_ft^(comp I)| = |G_f|. Throws CriterionNotMet when I is not
// block-compatible.
bool verify_isotropy_lemma(const InvertiblePolynomial& f, VarSet I,
                           long cap = DefaultCaps::group_order);

enum class BlockKind { Fermat, Chain, Loop };

struct AtomicBlock {
    BlockKind kind;
    std::vector<std::size_t> variables; // in chain/loop order
    std::vector<Int> exponents;         // head exponent per variable
};

enum class Nondegeneracy { ConfirmedNondegenerate, Unknown, NotDecomposable };

struct AtomicDecomposition {
    std::vector<AtomicBlock> blocks;
    Nondegeneracy verdict;
};

// match E, up to permutation, against a disjoint union of Fermat, chain and
// loop blocks
AtomicDecomposition classify_atomic(const InvertiblePolynomial& f);

enum class CorpusMode { Atomic, Sparse };

// deterministic for a fixed seed
std::vector<InvertiblePolynomial> generate_corpus(std::uint64_t seed, CorpusMode mode,
                                                  std::size_t n_max, long exp_max,
                                                  std::size_t count);

} // namespace bhdual
