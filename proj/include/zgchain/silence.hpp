#pragma once

// Cohomology silence in a degree: H^k(C;R) = 0 for every coefficient
// module R, decided by the two-part criterion
//   (b1) the boundary is von Neumann regular: some B solves d*B*d = d
//        (equivalently, B_{k-1} -> C_{k-1} admits a ZG-retraction), and
//   (b2) H_k = 0,
// with machine-checkable certificates in both directions.

#include <optional>
#include <stdexcept>
#include <vector>

#include "zgchain/chain_complex.hpp"
#include "zgchain/cohomology.hpp"

namespace zgc {

struct SilenceCertificate {
    enum class Kind { silent, not_silent };
    enum class Failure { none, retraction, homology };

    Kind kind = Kind::silent;
    Failure failure = Failure::none;
    int degree = 0;

    // silent: d*B*d = d, and d_{k+1}*Y = 1 - B*d (so cycles are
    // boundaries, certifying H_k = 0). Both re-verify by arithmetic.
    GroupRingMatrix retraction_witness;   // B
    GroupRingMatrix cycle_factorization;  // Y

    // not-silent: a coefficient module with a certified nonzero class.
    FPModule counterexample;
    std::vector<Int> cocycle;                       // cochain vector over the counterexample
    std::vector<Int> cocycle_relation_combo;        // y with delta*cocycle = Rel*y
    NonMembershipFunctional class_functional;       // kills coboundaries+relations, not the cocycle
    // on (b2) failure additionally a nonzero H_k element:
    std::vector<Int> homology_witness;              // flattened cycle in C_k
    NonMembershipFunctional homology_functional;    // kills im d_{k+1}, not the witness
};

namespace detail {

// B_{k-1} = im(d_k) as a Z-free FPModule on a Hermite basis of the
// image lattice, with the induced right-translation action.
inline FPModule boundary_image_module(const FreeChainComplex& c, int k, IntMatrix* basis_out = nullptr) {
    IntMatrix d = c.flatten_boundary(k);
    IntMatrix hb = column_hermite_basis(d);
    FPModule m;
    m.group = c.group();
    m.generators = hb.cols();
    m.relations = IntMatrix(m.generators, 0);
    for (std::size_t e = 0; e < c.group().order(); ++e) {
        if (m.generators == 0) {
            m.action.push_back(IntMatrix(0, 0));
            continue;
        }
        IntMatrix pg = right_translation_matrix(c.group(), c.group().inverse(e), c.rank(k - 1));
        auto a = solve_matrix(hb, pg * hb);
        if (!a) throw std::logic_error("boundary image lattice not translation-stable");
        m.action.push_back(*a);
    }
    if (basis_out) *basis_out = hb;
    return m;
}

inline std::vector<Int> matrix_vector(const IntMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> r(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && v[j] != 0) r[i] += m(i, j) * v[j];
    return r;
}

}  // namespace detail

inline SilenceCertificate silent_in_degree(const FreeChainComplex& c, int k) {
    if (k < 1) throw std::invalid_argument("silent_in_degree: degree must be >= 1");
    if (auto err = c.validate())
        throw std::invalid_argument("silent_in_degree: invalid complex: " + err->reason);

    const GroupData& g = c.group();
    SilenceCertificate cert;
    cert.degree = k;

    GroupRingMatrix d = c.boundary(k);
    auto b = gr_solve_sandwich(d, g);
    if (!b) {
        // (b1) fails: the boundary cocycle in H^k(C; B_{k-1}) is nonzero
        cert.kind = SilenceCertificate::Kind::not_silent;
        cert.failure = SilenceCertificate::Failure::retraction;
        IntMatrix hb;
        cert.counterexample = detail::boundary_image_module(c, k, &hb);
        const std::size_t m = cert.counterexample.generators;
        const std::size_t n = g.order();
        IntMatrix df = flatten(d, g);
        cert.cocycle.assign(m * c.rank(k), 0);
        for (std::size_t i = 0; i < c.rank(k); ++i) {
            auto coords = solve(hb, df.column(i * n));  // image of generator e_i
            if (!coords) throw std::logic_error("silence: boundary column not in image lattice");
            for (std::size_t a = 0; a < m; ++a) cert.cocycle[i * m + a] = (*coords)[a];
        }
        cert.cocycle_relation_combo.clear();  // coefficients are Z-free: cocycle means delta*v = 0
        auto w = cocycle_class_witness(c, cert.counterexample, k, cert.cocycle);
        if (!w) throw std::logic_error("silence: retraction insolvable but boundary class is a coboundary");
        cert.class_functional = *w;
        return cert;
    }

    // (b2): H_k = 0 iff every cycle is a boundary iff the ZG-system
    // d_{k+1} * Y = 1 - B*d_k is solvable (1 - B*d projects onto cycles).
    GroupRingMatrix proj_cycles = GroupRingMatrix::identity(c.rank(k)) - b->mul(d, g);
    std::optional<GroupRingMatrix> y;
    if (c.rank(k + 1) == 0) {
        if (proj_cycles.is_zero())
            y = GroupRingMatrix(0, c.rank(k));
    } else {
        y = gr_solve_left(c.boundary(k + 1), proj_cycles, g);
    }
    if (y) {
        cert.kind = SilenceCertificate::Kind::silent;
        cert.retraction_witness = *b;
        cert.cycle_factorization = *y;
        return cert;
    }

    // (b2) fails: emit a nonzero H_k element and the counterexample
    // module R = H_k with the projection cocycle.
    cert.kind = SilenceCertificate::Kind::not_silent;
    cert.failure = SilenceCertificate::Failure::homology;
    auto lat = detail::homology_lattices(c, k);
    cert.counterexample = homology_module(c, k);
    const std::size_t m = cert.counterexample.generators;
    const std::size_t n = g.order();

    for (std::size_t col = 0; col < lat.kernel.cols(); ++col) {
        auto f = non_membership_functional(lat.image, lat.kernel.column(col));
        if (f) {
            cert.homology_witness = lat.kernel.column(col);
            cert.homology_functional = *f;
            break;
        }
    }
    if (cert.homology_witness.empty())
        throw std::logic_error("silence: cycle factorization insolvable but H_k has no nonzero element");

    // cocycle alpha = (class of -) o (1 - B*d), surjective onto H_k
    IntMatrix pf = flatten(proj_cycles, g);
    cert.cocycle.assign(m * c.rank(k), 0);
    for (std::size_t i = 0; i < c.rank(k); ++i) {
        auto coords = solve(lat.kernel, pf.column(i * n));
        if (!coords) throw std::logic_error("silence: projected generator is not a cycle");
        for (std::size_t a = 0; a < m; ++a) cert.cocycle[i * m + a] = (*coords)[a];
    }
    // membership witness for delta*cocycle in the relation lattice
    {
        IntMatrix delta_j = coboundary_matrix(c, cert.counterexample, k);
        std::vector<Int> dv = detail::matrix_vector(delta_j, cert.cocycle);
        IntMatrix rel_next = detail::relation_block(cert.counterexample, c.rank(k + 1));
        if (rel_next.cols() == 0) {
            for (const Int& x : dv)
                if (x != 0) throw std::logic_error("silence: projection cochain is not a cocycle");
            cert.cocycle_relation_combo.clear();
        } else {
            auto combo = solve(rel_next, dv);
            if (!combo) throw std::logic_error("silence: projection cochain is not a cocycle");
            cert.cocycle_relation_combo = *combo;
        }
    }
    auto w = cocycle_class_witness(c, cert.counterexample, k, cert.cocycle);
    if (!w) throw std::logic_error("silence: H_k nonzero but projection class is a coboundary");
    cert.class_functional = *w;
    return cert;
}

inline std::vector<SilenceCertificate> silent_in_range(const FreeChainComplex& c, int k, int l) {
    if (k > l) throw std::invalid_argument("silent_in_range: k must be <= l");
    std::vector<SilenceCertificate> out;
    for (int j = k; j <= l; ++j) out.push_back(silent_in_degree(c, j));
    return out;
}

inline bool all_silent(const std::vector<SilenceCertificate>& certs) {
    for (const auto& c : certs)
        if (c.kind != SilenceCertificate::Kind::silent) return false;
    return true;
}

// Re-verification by plain matrix arithmetic (no solvers): the one
// entry point trusted by `verify-certificate`.
inline bool verify_silence_certificate(const FreeChainComplex& c, const SilenceCertificate& cert,
                                       std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const GroupData& g = c.group();
    const int k = cert.degree;
    GroupRingMatrix d = c.boundary(k);
    if (cert.kind == SilenceCertificate::Kind::silent) {
        const GroupRingMatrix& b = cert.retraction_witness;
        if (b.rows() != d.cols() || b.cols() != d.rows()) return fail("retraction witness has wrong shape");
        if (d.mul(b, g).mul(d, g) != d) return fail("d*B*d != d");
        GroupRingMatrix proj = GroupRingMatrix::identity(c.rank(k)) - b.mul(d, g);
        if (c.rank(k + 1) == 0) {
            if (!proj.is_zero()) return fail("no degree k+1 generators but 1-B*d != 0");
        } else {
            if (cert.cycle_factorization.rows() != c.rank(k + 1) || cert.cycle_factorization.cols() != c.rank(k))
                return fail("cycle factorization has wrong shape");
            if (c.boundary(k + 1).mul(cert.cycle_factorization, g) != proj)
                return fail("d_{k+1}*Y != 1 - B*d");
        }
        return true;
    }
    // not-silent: check the functional certificate by arithmetic
    const FPModule& r = cert.counterexample;
    IntMatrix delta_j = coboundary_matrix(c, r, k);
    std::vector<Int> dv = detail::matrix_vector(delta_j, cert.cocycle);
    IntMatrix rel_next = detail::relation_block(r, c.rank(k + 1));
    if (cert.cocycle_relation_combo.empty()) {
        for (const Int& x : dv)
            if (x != 0) return fail("claimed cocycle is not a cocycle");
    } else {
        std::vector<Int> ry = detail::matrix_vector(rel_next, cert.cocycle_relation_combo);
        if (ry != dv) return fail("cocycle relation combo does not match delta*cocycle");
    }
    IntMatrix delta_prev = coboundary_matrix(c, r, k - 1);
    IntMatrix i_gens = delta_prev.hcat(detail::relation_block(r, c.rank(k)));
    const auto& phi = cert.class_functional.phi;
    const Int& md = cert.class_functional.modulus;
    if (phi.size() != i_gens.rows()) return fail("class functional has wrong length");
    auto reduced = [&](Int v) {
        if (md != 0) v %= md;
        return v;
    };
    for (std::size_t j = 0; j < i_gens.cols(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < i_gens.rows(); ++i)
            if (i_gens(i, j) != 0 && phi[i] != 0) s += i_gens(i, j) * phi[i];
        if (reduced(s) != 0) return fail("class functional does not kill coboundaries/relations");
    }
    Int pv = 0;
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (phi[i] != 0 && cert.cocycle[i] != 0) pv += phi[i] * cert.cocycle[i];
    if (reduced(pv) == 0) return fail("class functional vanishes on the claimed cocycle");

    if (cert.failure == SilenceCertificate::Failure::homology) {
        IntMatrix df = c.flatten_boundary(k);
        std::vector<Int> dz = detail::matrix_vector(df, cert.homology_witness);
        for (const Int& x : dz)
            if (x != 0) return fail("homology witness is not a cycle");
        IntMatrix im = c.flatten_boundary(k + 1);
        const auto& hphi = cert.homology_functional.phi;
        const Int& hm = cert.homology_functional.modulus;
        if (hphi.size() != im.rows()) return fail("homology functional has wrong length");
        auto hreduced = [&](Int v) {
            if (hm != 0) v %= hm;
            return v;
        };
        for (std::size_t j = 0; j < im.cols(); ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < im.rows(); ++i)
                if (im(i, j) != 0 && hphi[i] != 0) s += im(i, j) * hphi[i];
            if (hreduced(s) != 0) return fail("homology functional does not kill boundaries");
        }
        Int hv = 0;
        for (std::size_t i = 0; i < hphi.size(); ++i)
            if (hphi[i] != 0 && cert.homology_witness[i] != 0) hv += hphi[i] * cert.homology_witness[i];
        if (hreduced(hv) == 0) return fail("homology functional vanishes on the witness");
    }
    return true;
}

}  // namespace zgc
