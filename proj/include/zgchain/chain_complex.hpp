#pragma once

// Finite free ZG-chain complexes (the algebraic stand-in for the
// cellular chain complex of a universal cover), homology as finitely
// presented ZG-modules, and basis-aligned subcomplex pairs.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zgchain/gr_matrix.hpp"
#include "zgchain/group.hpp"

namespace zgc {

// A ZG-module that is finitely generated over Z: quotient of Z^n by the
// column lattice of `relations`, with the group acting on generators by
// integer matrices (a homomorphism modulo the relation lattice).
struct FPModule {
    GroupData group;
    std::size_t generators = 0;
    IntMatrix relations;             // generators x s
    std::vector<IntMatrix> action;   // one generators x generators matrix per element

    static FPModule zero(const GroupData& g) {
        FPModule m;
        m.group = g;
        m.generators = 0;
        m.relations = IntMatrix(0, 0);
        m.action.assign(g.order(), IntMatrix(0, 0));
        return m;
    }

    // action[] always stores the LEFT action of each element; modules
    // carried by right translation store translation by the inverse.
    static FPModule free_module(const GroupData& g, std::size_t rank) {
        FPModule m;
        m.group = g;
        m.generators = rank * g.order();
        m.relations = IntMatrix(m.generators, 0);
        m.action.reserve(g.order());
        for (std::size_t e = 0; e < g.order(); ++e)
            m.action.push_back(right_translation_matrix(g, g.inverse(e), rank));
        return m;
    }

    bool is_z_torsion_free() const {
        if (generators == 0) return true;
        for (const Int& t : cokernel_group(relations).torsion)
            if (t != 0) return false;
        return true;
    }

    AbelianGroup underlying_group() const {
        if (generators == 0) return AbelianGroup{};
        return cokernel_group(relations);
    }

    Int z_rank() const { return Int(underlying_group().free_rank); }
};

// Z-free finite-rank coefficient module: a left action by invertible
// integer matrices.
struct LatticeModule {
    GroupData group;
    std::size_t rank = 0;
    std::vector<IntMatrix> action;  // left action, action[g*h] = action[g]*action[h]

    std::optional<std::string> validate() const {
        if (action.size() != group.order()) return "action table has wrong length";
        for (const auto& m : action)
            if (m.rows() != rank || m.cols() != rank) return "action matrix has wrong shape";
        if (rank == 0) return std::nullopt;
        if (action[0] != IntMatrix::identity(rank)) return "identity does not act as identity";
        for (std::size_t a = 0; a < group.order(); ++a)
            for (std::size_t b = 0; b < group.order(); ++b)
                if (action[a] * action[b] != action[group.mult(a, b)])
                    return "action is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return std::nullopt;
    }

    static LatticeModule trivial(const GroupData& g) {
        LatticeModule m;
        m.group = g;
        m.rank = 1;
        m.action.assign(g.order(), IntMatrix::identity(1));
        return m;
    }

    static LatticeModule zero(const GroupData& g) {
        LatticeModule m;
        m.group = g;
        m.rank = 0;
        m.action.assign(g.order(), IntMatrix(0, 0));
        return m;
    }

    static LatticeModule regular(const GroupData& g) {
        LatticeModule m;
        m.group = g;
        m.rank = g.order();
        m.action.reserve(g.order());
        for (std::size_t e = 0; e < g.order(); ++e)
            m.action.push_back(left_multiplication_matrix(GroupRingElement::term(1, e), g));
        return m;
    }

    // Kernel of the augmentation ZG -> Z, basis { g_i - e : i >= 1 }.
    static LatticeModule augmentation_ideal(const GroupData& g) {
        LatticeModule m;
        m.group = g;
        const std::size_t n = g.order();
        m.rank = n - 1;
        for (std::size_t e = 0; e < n; ++e) {
            IntMatrix a(n - 1, n - 1);
            for (std::size_t i = 1; i < n; ++i) {
                // (g_i - e0) * acts by left mult: g*(g_i - e0) = (g*g_i - e0) - (g - e0)
                std::size_t gi = g.mult(e, i);
                if (gi != 0) a(gi - 1, i - 1) += 1;
                if (e != 0) a(e - 1, i - 1) -= 1;
            }
            m.action.push_back(a);
        }
        return m;
    }

    FPModule as_fp_module() const {
        FPModule f;
        f.group = group;
        f.generators = rank;
        f.relations = IntMatrix(rank, 0);
        f.action = action;
        return f;
    }
};

struct ValidationFailure {
    std::string reason;
    int degree = 0;            // first failing degree (the j of d_{j-1} o d_j != 0)
    std::size_t witness_column = 0;
};

class FreeChainComplex {
public:
    FreeChainComplex() = default;

    FreeChainComplex(GroupData group, int bottom_degree, std::vector<std::size_t> ranks,
                     std::vector<GroupRingMatrix> boundaries)
        : group_(std::move(group)),
          bottom_(bottom_degree),
          ranks_(std::move(ranks)),
          boundaries_(std::move(boundaries)) {}

    static FreeChainComplex empty(const GroupData& g) { return FreeChainComplex(g, 0, {}, {}); }

    const GroupData& group() const { return group_; }
    int bottom_degree() const { return bottom_; }
    int top_degree() const { return bottom_ + static_cast<int>(ranks_.size()) - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const std::vector<GroupRingMatrix>& boundaries() const { return boundaries_; }

    std::size_t rank(int degree) const {
        if (ranks_.empty() || degree < bottom_ || degree > top_degree()) return 0;
        return ranks_[degree - bottom_];
    }

    // d_j : C_j -> C_{j-1}; zero matrix of the right shape off the support.
    GroupRingMatrix boundary(int degree) const {
        int idx = degree - bottom_ - 1;
        if (idx >= 0 && idx < static_cast<int>(boundaries_.size())) return boundaries_[idx];
        return GroupRingMatrix(rank(degree - 1), rank(degree));
    }

    std::optional<ValidationFailure> validate() const {
        if (!ranks_.empty() && boundaries_.size() + 1 != ranks_.size())
            return ValidationFailure{"boundary list length must be ranks length - 1", bottom_, 0};
        for (std::size_t i = 0; i < boundaries_.size(); ++i) {
            const GroupRingMatrix& d = boundaries_[i];
            if (d.rows() != ranks_[i] || d.cols() != ranks_[i + 1])
                return ValidationFailure{"boundary dimensions do not match adjacent ranks",
                                         bottom_ + static_cast<int>(i) + 1, 0};
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t c = 0; c < d.cols(); ++c)
                    for (const auto& [e, coeff] : d(r, c).coeffs())
                        if (e >= group_.order())
                            return ValidationFailure{"boundary entry references element out of range",
                                                     bottom_ + static_cast<int>(i) + 1, c};
        }
        for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i) {
            GroupRingMatrix prod = boundaries_[i].mul(boundaries_[i + 1], group_);
            for (std::size_t c = 0; c < prod.cols(); ++c)
                for (std::size_t r = 0; r < prod.rows(); ++r)
                    if (!prod(r, c).is_zero())
                        return ValidationFailure{"d o d != 0", bottom_ + static_cast<int>(i) + 2, c};
        }
        return std::nullopt;
    }

    IntMatrix flatten_boundary(int degree) const { return flatten(boundary(degree), group_); }

    std::size_t flattened_rank(int degree) const { return rank(degree) * group_.order(); }

    // |G| * sum (-1)^j rank_j
    Int flattened_euler_characteristic() const {
        Int chi = 0;
        for (int j = bottom_; j <= top_degree(); ++j) {
            Int term = Int(rank(j));
            if (((j % 2) + 2) % 2 == 1) term = -term;
            chi += term;
        }
        return chi * Int(group_.order());
    }

    // sum (-1)^j rank_j (the ZG-rank alternating sum; the Euler
    // characteristic of the underlying finite complex)
    Int euler_characteristic() const {
        Int chi = 0;
        for (int j = bottom_; j <= top_degree(); ++j) {
            Int term = Int(rank(j));
            if (((j % 2) + 2) % 2 == 1) term = -term;
            chi += term;
        }
        return chi;
    }

private:
    GroupData group_;
    int bottom_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<GroupRingMatrix> boundaries_;
};

namespace detail {

// Lattice kernel of d_j together with the right-translation action,
// presented on a Hermite basis of ker.
struct HomologyData {
    IntMatrix kernel;     // columns form a basis of ker(flatten d_j)
    IntMatrix image;      // generating set of im(flatten d_{j+1})
};

inline HomologyData homology_lattices(const FreeChainComplex& c, int j) {
    HomologyData h;
    const std::size_t nj = c.flattened_rank(j);
    if (nj == 0) {
        h.kernel = IntMatrix(0, 0);
        h.image = IntMatrix(0, 0);
        return h;
    }
    if (c.rank(j - 1) == 0) {
        h.kernel = IntMatrix::identity(nj);
    } else {
        h.kernel = kernel_basis(c.flatten_boundary(j));
    }
    if (c.rank(j + 1) == 0) {
        h.image = IntMatrix(nj, 0);
    } else {
        h.image = c.flatten_boundary(j + 1);
    }
    return h;
}

}  // namespace detail

// H_j as a finitely presented ZG-module: generators are a basis of the
// cycle lattice, relations express boundaries in that basis, the action
// is induced right translation.
inline FPModule homology_module(const FreeChainComplex& c, int j) {
    if (c.rank(j) == 0) return FPModule::zero(c.group());
    auto lat = detail::homology_lattices(c, j);
    FPModule m;
    m.group = c.group();
    m.generators = lat.kernel.cols();
    if (m.generators == 0) {
        m.relations = IntMatrix(0, 0);
        m.action.assign(c.group().order(), IntMatrix(0, 0));
        return m;
    }
    if (lat.image.cols() == 0) {
        m.relations = IntMatrix(m.generators, 0);
    } else {
        auto x = solve_matrix(lat.kernel, lat.image);
        if (!x) throw std::logic_error("homology: boundaries not contained in cycles (invalid complex?)");
        m.relations = *x;
    }
    for (std::size_t e = 0; e < c.group().order(); ++e) {
        IntMatrix pg = right_translation_matrix(c.group(), c.group().inverse(e), c.rank(j));
        auto a = solve_matrix(lat.kernel, pg * lat.kernel);
        if (!a) throw std::logic_error("homology: cycle lattice not translation-stable");
        m.action.push_back(*a);
    }
    return m;
}

inline AbelianGroup homology_group(const FreeChainComplex& c, int j) {
    if (c.rank(j) == 0) return AbelianGroup{};
    auto lat = detail::homology_lattices(c, j);
    return lattice_quotient(lat.kernel, lat.image);
}

// A basis-aligned subcomplex: for each degree, the sorted column subset
// belonging to the subcomplex.
struct SubcomplexDesignation {
    int bottom_degree = 0;
    std::vector<std::vector<std::size_t>> columns;  // per degree from bottom

    std::vector<std::size_t> at(int degree) const {
        int idx = degree - bottom_degree;
        if (idx < 0 || idx >= static_cast<int>(columns.size())) return {};
        return columns[idx];
    }
};

// Check the designated columns are closed under the boundary.
inline std::optional<std::string> check_subcomplex(const FreeChainComplex& t, const SubcomplexDesignation& x) {
    for (int j = t.bottom_degree(); j <= t.top_degree(); ++j) {
        auto cols = x.at(j);
        auto rows_allowed = x.at(j - 1);
        std::vector<bool> allowed(t.rank(j - 1), false);
        for (std::size_t r : rows_allowed) {
            if (r >= t.rank(j - 1)) return "designated row index out of range in degree " + std::to_string(j - 1);
            allowed[r] = true;
        }
        GroupRingMatrix d = t.boundary(j);
        for (std::size_t c : cols) {
            if (c >= t.rank(j)) return "designated column index out of range in degree " + std::to_string(j);
            for (std::size_t r = 0; r < d.rows(); ++r)
                if (!d(r, c).is_zero() && !allowed[r])
                    return "designated columns not closed under boundary at degree " + std::to_string(j);
        }
    }
    return std::nullopt;
}

// Quotient complex T/X for a basis-aligned subcomplex.
inline FreeChainComplex quotient_complex(const FreeChainComplex& t, const SubcomplexDesignation& x) {
    if (auto err = check_subcomplex(t, x)) throw std::invalid_argument("quotient_complex: " + *err);
    std::vector<std::size_t> ranks;
    std::vector<GroupRingMatrix> bnds;
    std::vector<std::vector<std::size_t>> keep;  // surviving columns per degree
    for (int j = t.bottom_degree(); j <= t.top_degree(); ++j) {
        auto sub = x.at(j);
        std::vector<bool> in_sub(t.rank(j), false);
        for (std::size_t c : sub) in_sub[c] = true;
        std::vector<std::size_t> k;
        for (std::size_t c = 0; c < t.rank(j); ++c)
            if (!in_sub[c]) k.push_back(c);
        keep.push_back(k);
        ranks.push_back(k.size());
    }
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
        const auto& rows = keep[i];
        const auto& cols = keep[i + 1];
        GroupRingMatrix d(rows.size(), cols.size());
        GroupRingMatrix full = t.boundary(t.bottom_degree() + static_cast<int>(i) + 1);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) d(r, c) = full(rows[r], cols[c]);
        bnds.push_back(d);
    }
    return FreeChainComplex(t.group(), t.bottom_degree(), std::move(ranks), std::move(bnds));
}

// The designated subcomplex as a complex in its own right.
inline FreeChainComplex subcomplex_complex(const FreeChainComplex& t, const SubcomplexDesignation& x) {
    if (auto err = check_subcomplex(t, x)) throw std::invalid_argument("subcomplex_complex: " + *err);
    std::vector<std::size_t> ranks;
    std::vector<GroupRingMatrix> bnds;
    for (int j = t.bottom_degree(); j <= t.top_degree(); ++j) ranks.push_back(x.at(j).size());
    for (int j = t.bottom_degree() + 1; j <= t.top_degree(); ++j) {
        auto rows = x.at(j - 1);
        auto cols = x.at(j);
        GroupRingMatrix full = t.boundary(j);
        GroupRingMatrix d(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) d(r, c) = full(rows[r], cols[c]);
        bnds.push_back(d);
    }
    return FreeChainComplex(t.group(), t.bottom_degree(), std::move(ranks), std::move(bnds));
}

inline FPModule relative_homology(const FreeChainComplex& t, const SubcomplexDesignation& x, int j) {
    return homology_module(quotient_complex(t, x), j);
}

inline AbelianGroup relative_homology_group(const FreeChainComplex& t, const SubcomplexDesignation& x, int j) {
    return homology_group(quotient_complex(t, x), j);
}

}  // namespace zgc
