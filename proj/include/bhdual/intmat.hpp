#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bhdual/errors.hpp"

namespace bhdual {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Subset of variable indices {0..n-1} as a bitmask.
using VarSet = std::uint32_t;

inline int popcount(VarSet s) { return __builtin_popcount(s); }
inline bool in_set(VarSet s, std::size_t i) { return (s >> i) & 1u; }
inline VarSet full_set(std::size_t n) { return n >= 32 ? ~VarSet(0) : (VarSet(1) << n) - 1; }
inline VarSet complement(VarSet s, std::size_t n) { return full_set(n) & ~s; }

inline VarSet to_varset(const std::vector<std::size_t>& indices) {
    VarSet s = 0;
    for (auto i : indices)
        s |= VarSet(1) << i;
    return s;
}

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    static IntMatrix identity(std::size_t n);
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;

    // Rows from `rows`, columns from the set bits of I, in increasing order.
    IntMatrix submatrix(const std::vector<std::size_t>& rows, VarSet I) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

// U * M * V = D with U, V unimodular and D = diag(d1,...,dn),
// di >= 1, di | d(i+1), prod di = |det M|.
struct SmithDecomposition {
    IntMatrix u, v, d;
    std::vector<Int> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// n x n exponent matrix of an invertible polynomial: non-negative
// entries, nonzero determinant, pairwise distinct rows.
class ExponentMatrix {
public:
    explicit ExponentMatrix(IntMatrix entries);

    std::size_t n() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    const Int& entry(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Int& det() const { return det_; }
    Int abs_det() const { return det_ < 0 ? Int(-det_) : det_; }

    ExponentMatrix transposed() const { return ExponentMatrix(m_.transposed()); }
    bool operator==(const ExponentMatrix& o) const { return m_ == o.m_; }

private:
    IntMatrix m_;
    Int det_;
};

struct InvertiblePolynomial {
    ExponentMatrix matrix;
    std::vector<std::string> variable_names;
    // original coefficients, for display only; canonical form is all 1
    std::vector<Rat> coefficients;

    std::size_t n() const { return matrix.n(); }
};

InvertiblePolynomial polynomial_from_matrix(ExponentMatrix m);

// Grammar: poly := term ('+' term)*; term := (integer '*')? factor ('*' factor)*;
// factor := var ('^' posint)?; var := 'x' posint | identifier.
InvertiblePolynomial parse_polynomial(const std::string& text);

// Canonical form (unit coefficients); parse(to_string(f)) == f.
std::string to_string(const InvertiblePolynomial& f);

struct WeightVector {
    std::vector<Rat> w; // unique exact solution of E * w = (1,...,1)
    bool all_positive;
};

WeightVector weights(const InvertiblePolynomial& f);

// Indices i of monomials supported in the variables of I: E_ij = 0 for all j not in I.
std::vector<std::size_t> rows_supported_in(const InvertiblePolynomial& f, VarSet I);

} // namespace bhdual
