#pragma once

// Cohomology with local coefficients: homology of Hom_ZG(C_*, R) with
// coboundary delta(alpha) = (-1)^k alpha o d, computed as integer
// linear algebra with equivariance folded into the cochain encoding.
//
// A ZG-homomorphism C_j -> R from a based free module is determined by
// the images of the generators, so cochains in degree j are integer
// vectors of length (generators of R) * rank_j, taken modulo the
// relation lattice of R when R is a quotient module.

#include <stdexcept>
#include <vector>

#include "zgchain/chain_complex.hpp"

namespace zgc {

namespace detail {

// Right-action form of the coefficient action: a |-> sum_g c_g A(g^-1).
inline IntMatrix coefficient_action(const FPModule& r, const GroupRingElement& c) {
    IntMatrix m(r.generators, r.generators);
    for (const auto& [g, cg] : c.coeffs()) {
        const IntMatrix& ag = r.action.at(r.group.inverse(g));
        for (std::size_t i = 0; i < r.generators; ++i)
            for (std::size_t j = 0; j < r.generators; ++j)
                if (ag(i, j) != 0) m(i, j) += cg * ag(i, j);
    }
    return m;
}

// Relation lattice of R^(copies), block diagonal.
inline IntMatrix relation_block(const FPModule& r, std::size_t copies) {
    IntMatrix b(r.generators * copies, r.relations.cols() * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < r.generators; ++i)
            for (std::size_t j = 0; j < r.relations.cols(); ++j)
                if (r.relations(i, j) != 0) b(c * r.generators + i, c * r.relations.cols() + j) = r.relations(i, j);
    return b;
}

}  // namespace detail

// Matrix of delta_j : Hom(C_j, R) -> Hom(C_{j+1}, R); block (q, i) is
// (-1)^j times the right-action matrix of the boundary entry d(i, q).
inline IntMatrix coboundary_matrix(const FreeChainComplex& c, const FPModule& r, int j) {
    const std::size_t m = r.generators;
    const std::size_t rj = c.rank(j), rj1 = c.rank(j + 1);
    IntMatrix delta(m * rj1, m * rj);
    if (rj == 0 || rj1 == 0 || m == 0) return delta;
    GroupRingMatrix d = c.boundary(j + 1);
    const bool neg = ((j % 2) + 2) % 2 == 1;
    for (std::size_t q = 0; q < rj1; ++q)
        for (std::size_t i = 0; i < rj; ++i) {
            const GroupRingElement& e = d(i, q);
            if (e.is_zero()) continue;
            IntMatrix blk = detail::coefficient_action(r, e);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (blk(a, b) != 0) delta(q * m + a, i * m + b) = neg ? -blk(a, b) : blk(a, b);
        }
    return delta;
}

// H^j(C; R) as an abelian group, for R finitely presented (lattice
// modules are the relation-free case).
inline AbelianGroup cohomology_local(const FreeChainComplex& c, const FPModule& r, int j) {
    if (!same_group(c.group(), r.group)) throw std::invalid_argument("cohomology_local: group mismatch");
    const std::size_t m = r.generators;
    const std::size_t rj = c.rank(j);
    if (m == 0 || rj == 0) return AbelianGroup{};

    IntMatrix delta_j = coboundary_matrix(c, r, j);
    IntMatrix delta_prev = coboundary_matrix(c, r, j - 1);
    IntMatrix rel_j = detail::relation_block(r, rj);
    IntMatrix rel_next = detail::relation_block(r, c.rank(j + 1));

    // cocycle lattice K = { v : delta_j v in rel_next }
    IntMatrix k_gens;
    if (delta_j.rows() == 0) {
        k_gens = IntMatrix::identity(m * rj);
    } else if (rel_next.cols() == 0) {
        k_gens = kernel_basis(delta_j);
    } else {
        IntMatrix stacked = delta_j.hcat(-rel_next);
        IntMatrix kb = kernel_basis(stacked);
        k_gens = kb.submatrix(0, 0, m * rj, kb.cols());
    }
    // coboundaries plus relations
    IntMatrix i_gens = delta_prev.hcat(rel_j);
    return lattice_quotient(k_gens, i_gens);
}

inline AbelianGroup cohomology_local(const FreeChainComplex& c, const LatticeModule& r, int j) {
    return cohomology_local(c, r.as_fp_module(), j);
}

// Is the integer cochain vector a cocycle (delta v in the relation
// lattice of R^(rank_{j+1}))?
inline bool is_cocycle(const FreeChainComplex& c, const FPModule& r, int j, const std::vector<Int>& v) {
    IntMatrix delta_j = coboundary_matrix(c, r, j);
    if (v.size() != delta_j.cols()) throw std::invalid_argument("is_cocycle: dimension mismatch");
    std::vector<Int> dv(delta_j.rows(), 0);
    for (std::size_t i = 0; i < delta_j.rows(); ++i)
        for (std::size_t k = 0; k < delta_j.cols(); ++k)
            if (delta_j(i, k) != 0 && v[k] != 0) dv[i] += delta_j(i, k) * v[k];
    IntMatrix rel_next = detail::relation_block(r, c.rank(j + 1));
    if (rel_next.cols() == 0) {
        for (const Int& x : dv)
            if (x != 0) return false;
        return true;
    }
    return lattice_contains(rel_next, dv);
}

// Functional certificate that the cocycle's class in H^j(C;R) is
// nonzero (phi kills coboundaries and relations, not v). nullopt when
// the class is zero.
inline std::optional<NonMembershipFunctional> cocycle_class_witness(const FreeChainComplex& c, const FPModule& r,
                                                                    int j, const std::vector<Int>& v) {
    IntMatrix delta_prev = coboundary_matrix(c, r, j - 1);
    IntMatrix rel_j = detail::relation_block(r, c.rank(j));
    IntMatrix i_gens = delta_prev.hcat(rel_j);
    return non_membership_functional(i_gens, v);
}

}  // namespace zgc
