#pragma once

// Degreewise maps between free ZG-chain complexes, chain homotopies,
// and the two-sided homotopy-equivalence certificate emitted by the
// cell-cancellation machinery. Verification is exact matrix arithmetic.

#include <map>
#include <string>

#include "zgchain/chain_complex.hpp"

namespace zgc {

// f_j : source_j -> target_j, stored sparsely by degree; missing
// degrees are zero maps.
struct ChainMap {
    std::map<int, GroupRingMatrix> blocks;

    GroupRingMatrix at(int degree, const FreeChainComplex& target, const FreeChainComplex& source) const {
        auto it = blocks.find(degree);
        if (it != blocks.end()) return it->second;
        return GroupRingMatrix(target.rank(degree), source.rank(degree));
    }

    static ChainMap identity(const FreeChainComplex& c) {
        ChainMap m;
        for (int j = c.bottom_degree(); j <= c.top_degree(); ++j)
            if (c.rank(j) > 0) m.blocks.emplace(j, GroupRingMatrix::identity(c.rank(j)));
        return m;
    }
};

// h_j : C_j -> C_{j+1}, stored at index j.
struct DegreeOneMap {
    std::map<int, GroupRingMatrix> blocks;

    GroupRingMatrix at(int degree, const FreeChainComplex& c) const {
        auto it = blocks.find(degree);
        if (it != blocks.end()) return it->second;
        return GroupRingMatrix(c.rank(degree + 1), c.rank(degree));
    }
};

// outer o inner, degreewise.
inline ChainMap compose(const ChainMap& outer, const ChainMap& inner, const FreeChainComplex& source,
                        const FreeChainComplex& mid, const FreeChainComplex& target) {
    ChainMap r;
    int lo = std::min(source.bottom_degree(), std::min(mid.bottom_degree(), target.bottom_degree()));
    int hi = std::max(source.top_degree(), std::max(mid.top_degree(), target.top_degree()));
    for (int j = lo; j <= hi; ++j) {
        if (source.rank(j) == 0 || target.rank(j) == 0) continue;
        GroupRingMatrix m = outer.at(j, target, mid).mul(inner.at(j, mid, source), source.group());
        if (!m.is_zero()) r.blocks.emplace(j, m);
    }
    return r;
}

inline bool is_chain_map(const ChainMap& f, const FreeChainComplex& source, const FreeChainComplex& target,
                         std::string* why = nullptr) {
    int lo = std::min(source.bottom_degree(), target.bottom_degree());
    int hi = std::max(source.top_degree(), target.top_degree());
    for (int j = lo; j <= hi + 1; ++j) {
        GroupRingMatrix lhs = target.boundary(j).mul(f.at(j, target, source), source.group());
        GroupRingMatrix rhs = f.at(j - 1, target, source).mul(source.boundary(j), source.group());
        if (lhs != rhs) {
            if (why) *why = "not a chain map at degree " + std::to_string(j);
            return false;
        }
    }
    return true;
}

// f : C -> C', g : C' -> C, with g o f - id = dh + hd on C and
// f o g - id = dh' + h'd on C'.
struct HomotopyCertificate {
    ChainMap f;
    ChainMap g;
    DegreeOneMap h;        // on the source complex
    DegreeOneMap h_prime;  // on the target complex
};

inline bool verify_homotopy_certificate(const FreeChainComplex& source, const FreeChainComplex& target,
                                        const HomotopyCertificate& cert, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const GroupData& gd = source.group();
    if (!same_group(source.group(), target.group())) return fail("certificate links complexes over different groups");
    std::string sub;
    if (!is_chain_map(cert.f, source, target, &sub)) return fail("f: " + sub);
    if (!is_chain_map(cert.g, target, source, &sub)) return fail("g: " + sub);
    int lo = std::min(source.bottom_degree(), target.bottom_degree());
    int hi = std::max(source.top_degree(), target.top_degree());
    for (int j = lo; j <= hi; ++j) {
        // g o f - id = d h + h d on the source
        if (source.rank(j) > 0) {
            GroupRingMatrix gf = cert.g.at(j, source, target).mul(cert.f.at(j, target, source), gd) -
                                 GroupRingMatrix::identity(source.rank(j));
            GroupRingMatrix dh = source.boundary(j + 1).mul(cert.h.at(j, source), gd);
            GroupRingMatrix hd = cert.h.at(j - 1, source).mul(source.boundary(j), gd);
            if (gf != dh + hd) return fail("g o f - id != dh + hd at degree " + std::to_string(j));
        }
        // f o g - id = d h' + h' d on the target
        if (target.rank(j) > 0) {
            GroupRingMatrix fg = cert.f.at(j, target, source).mul(cert.g.at(j, source, target), gd) -
                                 GroupRingMatrix::identity(target.rank(j));
            GroupRingMatrix dh = target.boundary(j + 1).mul(cert.h_prime.at(j, target), gd);
            GroupRingMatrix hd = cert.h_prime.at(j - 1, target).mul(target.boundary(j), gd);
            if (fg != dh + hd) return fail("f o g - id != dh' + h'd at degree " + std::to_string(j));
        }
    }
    return true;
}

}  // namespace zgc
