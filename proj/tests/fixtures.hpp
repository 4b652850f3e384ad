#pragma once

// Shared builders for groups, model complexes and idempotent batteries.

#include <cstdint>
#include <vector>

#include "zgchain/chain_complex.hpp"
#include "zgchain/gr_matrix.hpp"

namespace fix {

using namespace zgc;

inline GroupData c2() { return GroupData::cyclic(2); }
inline GroupData c2_oriented() { return GroupData("C2", {"e", "t"}, {{0, 1}, {1, 0}}, {1, -1}); }
inline GroupData c3() { return GroupData::cyclic(3); }
inline GroupData s3() { return GroupData::from_permutation_generators("S3", {{1, 0, 2}, {1, 2, 0}}); }
inline GroupData q8() {
    return GroupData::from_permutation_generators("Q8", {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
}

inline GroupRingElement gre(std::initializer_list<std::pair<long, std::size_t>> terms) {
    GroupRingElement e;
    for (const auto& [c, g] : terms) e.add_term(c, g);
    return e;
}

// chain model of RP^2 over C2: d1 = t-1, d2 = 1+t
inline FreeChainComplex rp2(const GroupData& g) {
    GroupRingMatrix d1(1, 1), d2(1, 1);
    d1(0, 0) = gre({{-1, 0}, {1, 1}});
    d2(0, 0) = gre({{1, 0}, {1, 1}});
    return FreeChainComplex(g, 0, {1, 1, 1}, {d1, d2});
}

inline FreeChainComplex point(const GroupData& g) { return FreeChainComplex(g, 0, {1}, {}); }

// S^n chain model over the trivial group: ranks 1, 0, ..., 0, 1
inline FreeChainComplex sphere(int n) {
    GroupData t = GroupData::trivial();
    std::vector<std::size_t> ranks(n + 1, 0);
    ranks[0] = 1;
    ranks[n] = 1;
    std::vector<GroupRingMatrix> bnds;
    for (int j = 1; j <= n; ++j) bnds.push_back(GroupRingMatrix(ranks[j - 1], ranks[j]));
    return FreeChainComplex(t, 0, ranks, bnds);
}

// circle-like chain (ranks 1,1, zero boundary): Euler characteristic 0
inline FreeChainComplex chi_zero() {
    GroupData t = GroupData::trivial();
    return FreeChainComplex(t, 0, {1, 1}, {GroupRingMatrix(1, 1)});
}

inline GroupRingMatrix diag_idempotent(std::size_t size, std::size_t ones) {
    GroupRingMatrix e(size, size);
    for (std::size_t i = 0; i < ones; ++i) e(i, i) = GroupRingElement::one();
    return e;
}

// U diag(1, 0) U^{-1} with U = I + lambda e01; lambda a single term
inline GroupRingMatrix conjugated_idempotent(const GroupData& g, long coeff, std::size_t elem) {
    GroupRingMatrix u = GroupRingMatrix::identity(2), uinv = GroupRingMatrix::identity(2);
    u(0, 1) = GroupRingElement::term(coeff, elem);
    uinv(0, 1) = GroupRingElement::term(-coeff, elem);
    GroupRingMatrix d(2, 2);
    d(0, 0) = GroupRingElement::one();
    return u.mul(d, g).mul(uinv, g);
}

// [[2+t, 2+t], [-1-t, -1-t]] over ZC2: idempotent whose entries are
// all non-units (starves greedy unit-pivot cancellation)
inline GroupRingMatrix unit_free_idempotent_c2(const GroupData& g) {
    GroupRingMatrix e(2, 2);
    e(0, 0) = gre({{2, 0}, {1, 1}});
    e(0, 1) = e(0, 0);
    e(1, 0) = gre({{-1, 0}, {-1, 1}});
    e(1, 1) = e(1, 0);
    if (!e.is_idempotent(g)) throw std::logic_error("fixture: unit-free idempotent broken");
    return e;
}

// deterministic xorshift rng for property batteries
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long pick(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

inline GroupRingElement random_element(Rng& rng, const GroupData& g, long coeff_bound, std::size_t max_terms) {
    GroupRingElement e;
    std::size_t terms = static_cast<std::size_t>(rng.pick(0, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i)
        e.add_term(rng.pick(-coeff_bound, coeff_bound), static_cast<std::size_t>(rng.pick(0, g.order() - 1)));
    return e;
}

inline GroupRingMatrix random_matrix(Rng& rng, const GroupData& g, std::size_t rows, std::size_t cols,
                                     long coeff_bound, std::size_t max_terms) {
    GroupRingMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(rng, g, coeff_bound, max_terms);
    return m;
}

// designation selecting every column of T (X = T)
inline SubcomplexDesignation full_designation(const FreeChainComplex& t) {
    SubcomplexDesignation d;
    d.bottom_degree = t.bottom_degree();
    for (int j = t.bottom_degree(); j <= t.top_degree(); ++j) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < t.rank(j); ++c) cols.push_back(c);
        d.columns.push_back(cols);
    }
    return d;
}

}  // namespace fix
