#pragma once

// Dense matrices over arbitrary-precision integers, with the exact
// linear algebra used everywhere else: Smith and Hermite normal forms,
// integer linear solving, kernel/image lattices and lattice quotients.

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace zgc {

using Int = mpz_class;

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const Int& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& v : data_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Int& b = o(k, j);
                    if (b != 0) p(i, j) += a * b;
                }
            }
        return p;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
        return s;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
        return s;
    }

    IntMatrix operator-() const {
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = -data_[i];
        return s;
    }

    IntMatrix operator*(const Int& c) const {
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] * c;
        return s;
    }

    Int trace() const {
        Int t = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    std::vector<Int> column(std::size_t c) const {
        std::vector<Int> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
        return v;
    }

    void set_column(std::size_t c, const std::vector<Int>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
    }

    // Matrix whose columns are those of *this followed by those of o.
    IntMatrix hcat(const IntMatrix& o) const {
        if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix: row mismatch in hcat");
        IntMatrix m(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
        }
        return m;
    }

    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        assert(r0 + nr <= rows_ && c0 + nc <= cols_);
        IntMatrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

struct SmithForm {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, u*a*v = d, d1 | d2 | ...
    IntMatrix v;  // unimodular, cols x cols
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
inline void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += c * m(src, j);
}
inline void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}
inline void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}
inline void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

}  // namespace detail

// Smith normal form via row/column reduction. Pivoting prefers the
// smallest nonzero absolute value to limit coefficient growth.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    using namespace detail;
    const std::size_t nr = a.rows(), nc = a.cols();
    SmithForm f{IntMatrix::identity(nr), a, IntMatrix::identity(nc)};
    IntMatrix& d = f.d;
    IntMatrix& u = f.u;
    IntMatrix& v = f.v;

    std::size_t t = 0;
    const std::size_t tmax = std::min(nr, nc);
    while (t < tmax) {
        // find smallest-|.| nonzero pivot in d[t.., t..]
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (d(i, j) == 0) continue;
                Int av = abs(d(i, j));
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < nr; ++i) {
            if (d(i, t) == 0) continue;
            Int q = d(i, t) / d(t, t);  // truncated division keeps remainders small
            add_row_multiple(d, i, t, -q);
            add_row_multiple(u, i, t, -q);
            if (d(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
            if (d(t, j) == 0) continue;
            Int q = d(t, j) / d(t, t);
            add_col_multiple(d, j, t, -q);
            add_col_multiple(v, j, t, -q);
            if (d(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // re-pick a smaller pivot

        // enforce divisibility d(t,t) | d(i,j) for the remaining block
        bool divides_all = true;
        for (std::size_t i = t + 1; i < nr && divides_all; ++i)
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d(i, j) % d(t, t) != 0) {
                    // fold row i into row t and restart the pivot step
                    add_row_multiple(d, t, i, 1);
                    add_row_multiple(u, t, i, 1);
                    divides_all = false;
                    break;
                }
            }
        if (!divides_all) continue;

        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
        ++t;
    }
    return f;
}

// Rank over the rationals (= number of nonzero diagonal entries in the SNF).
inline std::size_t rank(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(f.d.rows(), f.d.cols()); ++i)
        if (f.d(i, i) != 0) ++r;
    return r;
}

// Nontrivial invariant factors (diagonal of the SNF, zeros dropped, 1s dropped),
// plus the free rank, describing coker(a) = Z^rows / colspan(a).
struct AbelianGroup {
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
    std::size_t free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    bool operator==(const AbelianGroup& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        for (std::size_t i = 0; i < free_rank; ++i) {
            if (!s.empty()) s += " + ";
            s += "Z";
        }
        for (const Int& t : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.get_str();
        }
        return s;
    }
};

inline AbelianGroup cokernel_group(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    AbelianGroup g;
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(f.d.rows(), f.d.cols()); ++i) {
        if (f.d(i, i) == 0) break;
        ++r;
        if (f.d(i, i) > 1) g.torsion.push_back(f.d(i, i));
    }
    g.free_rank = a.rows() - r;
    return g;
}

// Some x with a*x = b over the integers, if one exists. Decided via SNF.
inline std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    SmithForm f = smith_normal_form(a);
    // u*a*v = d; a*x = b  <=>  d*y = u*b with x = v*y
    std::vector<Int> ub(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (f.u(i, k) != 0 && b[k] != 0) ub[i] += f.u(i, k) * b[k];
    std::vector<Int> y(a.cols(), 0);
    const std::size_t dmin = std::min(f.d.rows(), f.d.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int di = (i < dmin) ? f.d(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    std::vector<Int> x(a.cols(), 0);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (f.v(i, k) != 0 && y[k] != 0) x[i] += f.v(i, k) * y[k];
    return x;
}

// Columnwise solve: some x with a*x = b (matrix right-hand side).
inline std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b) {
    if (b.rows() != a.rows()) throw std::invalid_argument("solve_matrix: dimension mismatch");
    SmithForm f = smith_normal_form(a);
    IntMatrix x(a.cols(), b.cols());
    const std::size_t dmin = std::min(f.d.rows(), f.d.cols());
    IntMatrix ub = f.u * b;
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<Int> y(a.cols(), 0);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Int di = (i < dmin) ? f.d(i, i) : Int(0);
            if (di == 0) {
                if (ub(i, c) != 0) return std::nullopt;
            } else {
                if (ub(i, c) % di != 0) return std::nullopt;
                y[i] = ub(i, c) / di;
            }
        }
        for (std::size_t i = 0; i < a.cols(); ++i) {
            Int s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (f.v(i, k) != 0 && y[k] != 0) s += f.v(i, k) * y[k];
            x(i, c) = s;
        }
    }
    return x;
}

// Basis of ker(a) as columns. The kernel of an integer matrix is a
// saturated sublattice, so this basis extends to a basis of Z^cols.
inline IntMatrix kernel_basis(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(f.d.rows(), f.d.cols()); ++i)
        if (f.d(i, i) != 0) ++r;
    // kernel = v * span(e_{r}, ..., e_{cols-1})
    IntMatrix k(a.cols(), a.cols() - r);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = r; j < a.cols(); ++j) k(i, j - r) = f.v(i, j);
    return k;
}

// Column-style Hermite normal form: returns h with the same column span
// as a, columns reduced to a canonical independent generating set
// (lower echelon, positive pivots, entries right of a pivot reduced).
// Used as the canonical basis of the lattice spanned by a's columns.
inline IntMatrix column_hermite_basis(const IntMatrix& a) {
    using namespace detail;
    IntMatrix h = a;
    const std::size_t nr = h.rows(), nc = h.cols();
    std::size_t row = 0, col = 0;
    while (row < nr && col < nc) {
        // find nonzero entry with smallest |.| in row, from col onward
        std::size_t pj = col;
        bool found = false;
        Int best;
        for (std::size_t j = col; j < nc; ++j) {
            if (h(row, j) == 0) continue;
            Int av = abs(h(row, j));
            if (!found || av < best) {
                found = true;
                best = av;
                pj = j;
            }
        }
        if (!found) {
            ++row;
            continue;
        }
        swap_cols(h, col, pj);
        bool clean = true;
        for (std::size_t j = col + 1; j < nc; ++j) {
            if (h(row, j) == 0) continue;
            Int q = h(row, j) / h(row, col);
            add_col_multiple(h, j, col, -q);
            if (h(row, j) != 0) clean = false;
        }
        if (!clean) continue;
        if (h(row, col) < 0) negate_col(h, col);
        // reduce entries to the left of the pivot
        for (std::size_t j = 0; j < col; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, col).get_mpz_t());
            add_col_multiple(h, j, col, -q);
        }
        ++row;
        ++col;
    }
    // drop zero columns (they sit at the right after elimination)
    std::size_t keep = col;
    IntMatrix out(nr, keep);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < keep; ++j) out(i, j) = h(i, j);
    return out;
}

// Membership of v in the column span of basis (any generating set works).
inline bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v) {
    return solve(gens, v).has_value();
}

// Invariant factors of K/I where K, I are lattices given by generating
// sets (columns) with I contained in K. Columns of i_gens must lie in
// the span of k_gens over Z.
inline AbelianGroup lattice_quotient(const IntMatrix& k_gens, const IntMatrix& i_gens) {
    IntMatrix kb = column_hermite_basis(k_gens);
    if (kb.cols() == 0) {
        if (!i_gens.is_zero() && i_gens.cols() > 0) {
            // I must be zero when K is
            for (std::size_t c = 0; c < i_gens.cols(); ++c)
                for (std::size_t r = 0; r < i_gens.rows(); ++r)
                    if (i_gens(r, c) != 0) throw std::invalid_argument("lattice_quotient: I not contained in K");
        }
        return AbelianGroup{};
    }
    if (i_gens.cols() == 0) {
        AbelianGroup g;
        g.free_rank = kb.cols();
        return g;
    }
    auto x = solve_matrix(kb, i_gens);
    if (!x) throw std::invalid_argument("lattice_quotient: I not contained in K");
    return cokernel_group(*x);
}

// A functional certifying that v does not lie in the column span of
// gens: an integer row vector phi and modulus m (0 meaning over Z) with
// phi * gens == 0 (mod m) but phi * v != 0 (mod m). Verification needs
// only matrix arithmetic. Returns nullopt when v IS in the lattice.
struct NonMembershipFunctional {
    std::vector<Int> phi;
    Int modulus;  // 0: over Z
};

inline std::optional<NonMembershipFunctional> non_membership_functional(const IntMatrix& gens,
                                                                        const std::vector<Int>& v) {
    if (v.size() != gens.rows()) throw std::invalid_argument("non_membership_functional: dimension mismatch");
    SmithForm f = smith_normal_form(gens);
    const std::size_t dmin = std::min(f.d.rows(), f.d.cols());
    for (std::size_t i = 0; i < gens.rows(); ++i) {
        Int zi = 0;
        for (std::size_t k = 0; k < gens.rows(); ++k)
            if (f.u(i, k) != 0 && v[k] != 0) zi += f.u(i, k) * v[k];
        Int di = (i < dmin) ? f.d(i, i) : Int(0);
        bool fails = (di == 0) ? (zi != 0) : (zi % di != 0);
        if (fails) {
            NonMembershipFunctional w;
            w.phi.resize(gens.rows());
            for (std::size_t k = 0; k < gens.rows(); ++k) w.phi[k] = f.u(i, k);
            w.modulus = di;
            return w;
        }
    }
    return std::nullopt;
}

// det of a square matrix (via fraction-free elimination on a copy).
inline Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            detail::swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // Bareiss: exact division
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace zgc
