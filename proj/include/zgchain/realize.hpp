#pragma once

// Chain-level realization: given a base complex Y of top degree <= k-1
// and an idempotent E (image P, complement Q = im(1-E)), build the
// finite gap complex whose boundaries alternate E and 1-E through the
// gap degrees, and the nested finite stages whose degree-k boundary is
// block bidiagonal in E and 1-E.

#include <stdexcept>
#include <vector>

#include "zgchain/chain_complex.hpp"

namespace zgc {

struct RealizationInput {
    FreeChainComplex y;    // ranks vanish above degree k-1
    GroupRingMatrix e;     // idempotent, r x r
    int k = 3;
    int l = 4;

    void check() const {
        if (auto err = y.validate()) throw std::invalid_argument("realize: invalid base complex: " + err->reason);
        if (e.rows() != e.cols()) throw std::invalid_argument("realize: idempotent must be square");
        if (!e.is_idempotent(y.group())) throw std::invalid_argument("realize: E*E != E");
        if (k < 3) throw std::invalid_argument("realize: k must be >= 3");
        for (int j = k; j <= y.top_degree(); ++j)
            if (y.rank(j) != 0) throw std::invalid_argument("realize: base complex has cells above degree k-1");
    }
};

// Degrees <= k-2 copy Y; degree k-1 gains r sphere generators; degrees
// k .. l+1 have rank r with boundaries E, 1-E, E, ... ; the k-cells
// attach into the sphere summand by E and the mixed blocks are zero.
inline FreeChainComplex realize_finite(const RealizationInput& in) {
    in.check();
    if (in.l <= in.k) throw std::invalid_argument("realize_finite: need k < l");
    const GroupData& g = in.y.group();
    const std::size_t r = in.e.rows();
    const int bottom = in.y.ranks().empty() ? 0 : in.y.bottom_degree();

    std::vector<std::size_t> ranks;
    for (int j = bottom; j <= in.l + 1; ++j) {
        if (j <= in.k - 2)
            ranks.push_back(in.y.rank(j));
        else if (j == in.k - 1)
            ranks.push_back(in.y.rank(j) + r);
        else
            ranks.push_back(r);
    }
    std::vector<GroupRingMatrix> bnds;
    GroupRingMatrix one_minus_e = GroupRingMatrix::identity(r) - in.e;
    for (int j = bottom + 1; j <= in.l + 1; ++j) {
        if (j <= in.k - 2) {
            bnds.push_back(in.y.boundary(j));
        } else if (j == in.k - 1) {
            // [ dY | 0 ]: sphere generators are cycles
            GroupRingMatrix d(in.y.rank(j - 1), in.y.rank(j) + r);
            GroupRingMatrix dy = in.y.boundary(j);
            for (std::size_t a = 0; a < dy.rows(); ++a)
                for (std::size_t b = 0; b < dy.cols(); ++b) d(a, b) = dy(a, b);
            bnds.push_back(d);
        } else if (j == in.k) {
            // [0; E] into the sphere summand
            GroupRingMatrix d(in.y.rank(in.k - 1) + r, r);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) d(in.y.rank(in.k - 1) + a, b) = in.e(a, b);
            bnds.push_back(d);
        } else {
            bnds.push_back(((j - in.k) % 2 == 1) ? one_minus_e : in.e);
        }
    }
    return FreeChainComplex(g, bottom, std::move(ranks), std::move(bnds));
}

// Stage L_j of the nested system: degree k-1 holds j sphere-bouquet
// copies, degree k holds j-1 disk packets, packet s attaching by E into
// copy s and by 1-E into copy s+1.
inline FreeChainComplex realize_stage(const RealizationInput& in, int stage) {
    in.check();
    if (stage < 1) throw std::invalid_argument("realize_stage: stage must be >= 1");
    const GroupData& g = in.y.group();
    const std::size_t r = in.e.rows();
    const int bottom = in.y.ranks().empty() ? 0 : in.y.bottom_degree();
    const std::size_t copies = static_cast<std::size_t>(stage);

    std::vector<std::size_t> ranks;
    for (int j = bottom; j <= in.k; ++j) {
        if (j <= in.k - 2)
            ranks.push_back(in.y.rank(j));
        else if (j == in.k - 1)
            ranks.push_back(in.y.rank(j) + copies * r);
        else
            ranks.push_back((copies - 1) * r);
    }
    std::vector<GroupRingMatrix> bnds;
    GroupRingMatrix one_minus_e = GroupRingMatrix::identity(r) - in.e;
    for (int j = bottom + 1; j <= in.k; ++j) {
        if (j <= in.k - 2) {
            bnds.push_back(in.y.boundary(j));
        } else if (j == in.k - 1) {
            GroupRingMatrix d(in.y.rank(j - 1), in.y.rank(j) + copies * r);
            GroupRingMatrix dy = in.y.boundary(j);
            for (std::size_t a = 0; a < dy.rows(); ++a)
                for (std::size_t b = 0; b < dy.cols(); ++b) d(a, b) = dy(a, b);
            bnds.push_back(d);
        } else {
            // block bidiagonal: packet s -> E into copy s, 1-E into copy s+1
            GroupRingMatrix d(in.y.rank(in.k - 1) + copies * r, (copies - 1) * r);
            for (std::size_t s = 0; s + 1 < copies; ++s)
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t b = 0; b < r; ++b) {
                        if (!in.e(a, b).is_zero())
                            d(in.y.rank(in.k - 1) + s * r + a, s * r + b) = in.e(a, b);
                        if (!one_minus_e(a, b).is_zero())
                            d(in.y.rank(in.k - 1) + (s + 1) * r + a, s * r + b) = one_minus_e(a, b);
                    }
            bnds.push_back(d);
        }
    }
    return FreeChainComplex(g, bottom, std::move(ranks), std::move(bnds));
}

// The stage-j complex as a basis-aligned subcomplex of stage j+1.
inline SubcomplexDesignation stage_inclusion(const RealizationInput& in, int stage) {
    FreeChainComplex big = realize_stage(in, stage + 1);
    const std::size_t r = in.e.rows();
    SubcomplexDesignation d;
    d.bottom_degree = big.bottom_degree();
    for (int j = big.bottom_degree(); j <= big.top_degree(); ++j) {
        std::vector<std::size_t> cols;
        std::size_t count;
        if (j <= in.k - 2)
            count = big.rank(j);
        else if (j == in.k - 1)
            count = in.y.rank(j) + static_cast<std::size_t>(stage) * r;
        else
            count = static_cast<std::size_t>(stage - 1) * r;
        for (std::size_t c = 0; c < count; ++c) cols.push_back(c);
        d.columns.push_back(cols);
    }
    return d;
}

}  // namespace zgc
