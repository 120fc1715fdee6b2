#include "bhdual/intmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bhdual {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw Error("ragged initializer for IntMatrix");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw Error("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                p(r, c) += x * o(k, c);
        }
    return p;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows, VarSet I) const {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (in_set(I, j))
            cols.push_back(j);
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s(r, c) = (*this)(rows[r], cols[c]);
    return s;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = k; c < n; ++c)
                std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev; // exact by Bareiss
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> f;
    for (std::size_t i = 0; i < d.rows(); ++i)
        if (d(i, i) != 1)
            f.push_back(d(i, i));
    return f;
}

namespace {

// elementary row/column steps tracked in the unimodular factors
struct SnfWork {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& q) { // row dst += q * row src
        for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += q * a(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += q * u(src, c);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += q * a(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += q * v(r, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw Error("smith_normal_form of non-square matrix");
    const std::size_t n = m.rows();
    SnfWork w{m, IntMatrix::identity(n), IntMatrix::identity(n)};

    for (std::size_t t = 0; t < n; ++t) {
        // find a nonzero pivot in the trailing block
        std::size_t pr = n, pc = n;
        for (std::size_t i = t; i < n && pr == n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (w.a(i, j) != 0) { pr = i; pc = j; break; }
        if (pr == n)
            throw SingularMatrix("matrix is singular");
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        // clear row and column t; restart whenever a remainder appears
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w.a(i, t) == 0) continue;
                Int q = w.a(i, t) / w.a(t, t);
                w.add_row(i, t, -q);
                if (w.a(i, t) != 0) { // remainder becomes the smaller pivot
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.a(t, j) == 0) continue;
                Int q = w.a(t, j) / w.a(t, t);
                w.add_col(j, t, -q);
                if (w.a(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.a(t, t) < 0)
            w.negate_row(t);
    }

    SmithDecomposition s{w.u, w.v, w.a};
    if (s.u * m * s.v != s.d)
        throw InternalCheckFailure("SNF re-multiplication check failed");
    Int prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && s.d(i, i) % s.d(i - 1, i - 1) != 0)
            throw InternalCheckFailure("SNF divisibility chain broken");
        prod *= s.d(i, i);
    }
    Int dm = determinant(m);
    if (prod != (dm < 0 ? Int(-dm) : dm))
        throw InternalCheckFailure("SNF invariant factor product mismatch");
    return s;
}

ExponentMatrix::ExponentMatrix(IntMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
        throw NotSquare("exponent matrix must be square and non-empty");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (m_(i, j) < 0)
                throw Error("negative exponent");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i + 1; j < m_.rows(); ++j) {
            bool same = true;
            for (std::size_t c = 0; c < m_.cols() && same; ++c)
                same = m_(i, c) == m_(j, c);
            if (same)
                throw DuplicateMonomial("two monomials have identical exponents");
        }
    det_ = determinant(m_);
    if (det_ == 0)
        throw SingularMatrix("exponent matrix is singular");
}

InvertiblePolynomial polynomial_from_matrix(ExponentMatrix m) {
    std::vector<std::string> names;
    std::vector<Rat> coeffs(m.n(), Rat(1));
    for (std::size_t j = 0; j < m.n(); ++j)
        names.push_back("x" + std::to_string(j + 1));
    return InvertiblePolynomial{std::move(m), std::move(names), std::move(coeffs)};
}

std::string to_string(const InvertiblePolynomial& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.n(); ++i) {
        if (i) out << " + ";
        bool first = true;
        for (std::size_t j = 0; j < f.n(); ++j) {
            const Int& e = f.matrix.entry(i, j);
            if (e == 0) continue;
            if (!first) out << "*";
            out << f.variable_names[j];
            if (e != 1) out << "^" << e;
            first = false;
        }
    }
    return out.str();
}

WeightVector weights(const InvertiblePolynomial& f) {
    const std::size_t n = f.n();
    // rational Gaussian elimination on [E | 1]
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(f.matrix.entry(i, j));
        a[i][n] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (a[p][k] == 0) ++p; // nonsingular, pivot exists
        std::swap(a[k], a[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat q = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j)
                a[i][j] -= q * a[k][j];
        }
    }
    WeightVector wv;
    wv.all_positive = true;
    for (std::size_t i = 0; i < n; ++i) {
        wv.w.push_back(a[i][n] / a[i][i]);
        if (wv.w.back() <= 0)
            wv.all_positive = false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += Rat(f.matrix.entry(i, j)) * wv.w[j];
        if (s != 1)
            throw InternalCheckFailure("weight solve failed E*w = 1");
    }
    return wv;
}

std::vector<std::size_t> rows_supported_in(const InvertiblePolynomial& f, VarSet I) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < f.n(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < f.n() && ok; ++j)
            if (!in_set(I, j) && f.matrix.entry(i, j) != 0)
                ok = false;
        if (ok)
            rows.push_back(i);
    }
    return rows;
}

} // namespace bhdual
