#pragma once

// Rectangular matrices over ZG. These represent ZG-linear maps between
// based free modules: columns index source generators, rows index
// target generators, and composition is the plain matrix product.
// flatten() turns a ZG-matrix into the integer matrix of the same map
// on the Z-basis {e_i * g}, ordered generator-major.

#include <optional>
#include <stdexcept>
#include <vector>

#include "zgchain/group.hpp"
#include "zgchain/group_ring.hpp"
#include "zgchain/int_matrix.hpp"

namespace zgc {

class GroupRingMatrix {
public:
    GroupRingMatrix() : rows_(0), cols_(0) {}
    GroupRingMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static GroupRingMatrix identity(std::size_t n) {
        GroupRingMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GroupRingElement& operator()(std::size_t r, std::size_t c) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("GroupRingMatrix: index out of range");
        return entries_[r * cols_ + c];
    }
    const GroupRingElement& operator()(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("GroupRingMatrix: index out of range");
        return entries_[r * cols_ + c];
    }

    bool operator==(const GroupRingMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const GroupRingMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    GroupRingMatrix mul(const GroupRingMatrix& o, const GroupData& g) const {
        if (cols_ != o.rows_) throw std::invalid_argument("GroupRingMatrix: dimension mismatch in product");
        GroupRingMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const GroupRingElement& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const GroupRingElement& b = o(k, j);
                    if (!b.is_zero()) p(i, j) = p(i, j) + gr_mul(a, b, g);
                }
            }
        return p;
    }

    GroupRingMatrix operator+(const GroupRingMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GroupRingMatrix: dimension mismatch in sum");
        GroupRingMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] + o.entries_[i];
        return s;
    }

    GroupRingMatrix operator-(const GroupRingMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GroupRingMatrix: dimension mismatch in difference");
        GroupRingMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] - o.entries_[i];
        return s;
    }

    GroupRingMatrix operator-() const {
        GroupRingMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = -entries_[i];
        return s;
    }

    // Involute-transpose M* with (M*)(i,j) = involute(M(j,i)); satisfies
    // (M N)* = N* M* and implements the duality P |-> P* on idempotents.
    GroupRingMatrix involute_transpose(const GroupData& g) const {
        GroupRingMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = involute((*this)(i, j), g);
        return t;
    }

    bool is_idempotent(const GroupData& g) const {
        if (rows_ != cols_) return false;
        return mul(*this, g) == *this;
    }

    static GroupRingMatrix block_diag(const GroupRingMatrix& a, const GroupRingMatrix& b) {
        GroupRingMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GroupRingElement> entries_;
};

// Block matrix replacing every entry by its left-multiplication matrix.
// flatten(M.mul(N)) == flatten(M) * flatten(N).
inline IntMatrix flatten(const GroupRingMatrix& m, const GroupData& g) {
    const std::size_t n = g.order();
    IntMatrix f(m.rows() * n, m.cols() * n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const GroupRingElement& e = m(i, j);
            if (e.is_zero()) continue;
            IntMatrix blk = left_multiplication_matrix(e, g);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (blk(a, b) != 0) f(i * n + a, j * n + b) = blk(a, b);
        }
    return f;
}

// Permutation matrix of the right translation e_i*h |-> e_i*(h*g) on a
// flattened free module of the given generator count.
inline IntMatrix right_translation_matrix(const GroupData& g, std::size_t elem, std::size_t generators) {
    const std::size_t n = g.order();
    IntMatrix p(generators * n, generators * n);
    for (std::size_t i = 0; i < generators; ++i)
        for (std::size_t h = 0; h < n; ++h) p(i * n + g.mult(h, elem), i * n + h) = 1;
    return p;
}

// Solve A*X = C over ZG for X (n x p), where A is m x n. The equation
// is Z-linear in the integer coefficients of X; decided exactly.
inline std::optional<GroupRingMatrix> gr_solve_left(const GroupRingMatrix& a, const GroupRingMatrix& c,
                                                    const GroupData& g) {
    if (a.rows() != c.rows()) throw std::invalid_argument("gr_solve_left: dimension mismatch");
    const std::size_t n = g.order();
    const std::size_t unknown_rows = a.cols();
    // columns of X are independent; unknowns (j, gelem), equations (i, h)
    IntMatrix sys(a.rows() * n, unknown_rows * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < unknown_rows; ++j) {
            const GroupRingElement& e = a(i, j);
            for (const auto& [x, cx] : e.coeffs())
                for (std::size_t ge = 0; ge < n; ++ge)
                    sys(i * n + g.mult(x, ge), j * n + ge) += cx;
        }
    IntMatrix rhs(a.rows() * n, c.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t q = 0; q < c.cols(); ++q)
            for (const auto& [x, cx] : c(i, q).coeffs()) rhs(i * n + x, q) = cx;
    auto sol = solve_matrix(sys, rhs);
    if (!sol) return std::nullopt;
    GroupRingMatrix x(unknown_rows, c.cols());
    for (std::size_t j = 0; j < unknown_rows; ++j)
        for (std::size_t q = 0; q < c.cols(); ++q)
            for (std::size_t ge = 0; ge < n; ++ge) x(j, q).add_term((*sol)(j * n + ge, q), ge);
    return x;
}

// Solve D*B*D = D over ZG for B; existence is the retraction condition
// of the silence criterion (von Neumann regularity of the boundary).
inline std::optional<GroupRingMatrix> gr_solve_sandwich(const GroupRingMatrix& d, const GroupData& g) {
    const std::size_t n = g.order();
    const std::size_t br = d.cols(), bc = d.rows();  // B : target -> source
    const std::size_t nunk = br * bc * n;
    IntMatrix sys(d.rows() * d.cols() * n, nunk);
    std::vector<Int> rhs(d.rows() * d.cols() * n, 0);
    // coefficient of unknown B(i,j) = sum_g x g : entry (p,q) of D*B*D
    // gains D(p,i) * g * D(j,q)
    for (std::size_t p = 0; p < d.rows(); ++p)
        for (std::size_t q = 0; q < d.cols(); ++q) {
            const std::size_t eq_base = (p * d.cols() + q) * n;
            for (std::size_t i = 0; i < br; ++i) {
                const GroupRingElement& dpi = d(p, i);
                if (dpi.is_zero()) continue;
                for (std::size_t j = 0; j < bc; ++j) {
                    const GroupRingElement& djq = d(j, q);
                    if (djq.is_zero()) continue;
                    const std::size_t unk_base = (i * bc + j) * n;
                    for (std::size_t ge = 0; ge < n; ++ge) {
                        // D(p,i) * ge * D(j,q)
                        for (const auto& [x, cx] : dpi.coeffs())
                            for (const auto& [y, cy] : djq.coeffs())
                                sys(eq_base + g.mult(g.mult(x, ge), y), unk_base + ge) += cx * cy;
                    }
                }
            }
            for (const auto& [x, cx] : d(p, q).coeffs()) rhs[eq_base + x] = cx;
        }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    GroupRingMatrix b(br, bc);
    for (std::size_t i = 0; i < br; ++i)
        for (std::size_t j = 0; j < bc; ++j)
            for (std::size_t ge = 0; ge < n; ++ge) b(i, j).add_term((*sol)[(i * bc + j) * n + ge], ge);
    return b;
}

}  // namespace zgc
