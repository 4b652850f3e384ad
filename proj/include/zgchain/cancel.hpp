#pragma once

// Chain-level cell cancellation. The greedy pass eliminates generator
// pairs at unit-monomial pivots (Gaussian elimination over ZG); the
// stabilized pass additionally aligns the boundary image to a free
// coordinate summand using a silence witness and an explicit
// stable-freeness witness, then sweeps the gap degrees empty. Every
// step composes into one verifiable HomotopyCertificate.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zgchain/chain_map.hpp"
#include "zgchain/kzero.hpp"
#include "zgchain/silence.hpp"

namespace zgc {

struct CancelResult {
    bool success = false;
    FreeChainComplex output;
    HomotopyCertificate cert;  // links the input complex to output
    std::string note;
};

namespace detail {

inline GroupRingElement unit_inverse(const GroupRingElement& u, const GroupData& g) {
    const auto& [elem, coeff] = *u.coeffs().begin();
    return GroupRingElement::term(coeff, g.inverse(elem));  // coeff in {1,-1}
}

// A session accumulates the certificate across elementary steps.
class CancelSession {
public:
    explicit CancelSession(const FreeChainComplex& c) : original_(c), current_(c) {
        cert_.f = ChainMap::identity(c);
        cert_.g = ChainMap::identity(c);
    }

    const FreeChainComplex& current() const { return current_; }
    const FreeChainComplex& original() const { return original_; }
    HomotopyCertificate certificate() const { return cert_; }

    // apply a step (fs, gs, hs on current, hs' on next) landing in `next`
    void apply(const FreeChainComplex& next, const ChainMap& fs, const ChainMap& gs, const DegreeOneMap& hs,
               const DegreeOneMap& hs_prime) {
        const GroupData& gd = original_.group();
        // h <- h + g_old o hs o f_old
        for (int j = original_.bottom_degree() - 1; j <= original_.top_degree() + 1; ++j) {
            if (original_.rank(j) == 0 || original_.rank(j + 1) == 0) continue;
            GroupRingMatrix term = cert_.g.at(j + 1, original_, current_)
                                       .mul(hs.at(j, current_), gd)
                                       .mul(cert_.f.at(j, current_, original_), gd);
            if (term.is_zero()) continue;
            auto it = cert_.h.blocks.find(j);
            if (it == cert_.h.blocks.end())
                cert_.h.blocks.emplace(j, term);
            else
                it->second = it->second + term;
        }
        // h' <- hs' + fs o h'_old o gs
        DegreeOneMap new_hp;
        int lo = std::min(current_.bottom_degree(), next.bottom_degree()) - 1;
        int hi = std::max(current_.top_degree(), next.top_degree()) + 1;
        for (int j = lo; j <= hi; ++j) {
            if (next.rank(j) == 0 || next.rank(j + 1) == 0) continue;
            GroupRingMatrix term = fs.at(j + 1, next, current_)
                                       .mul(cert_.h_prime.at(j, current_), gd)
                                       .mul(gs.at(j, current_, next), gd);
            GroupRingMatrix base = hs_prime.at(j, next);
            GroupRingMatrix total = base + term;
            if (!total.is_zero()) new_hp.blocks.emplace(j, total);
        }
        cert_.h_prime = new_hp;
        cert_.f = compose(fs, cert_.f, original_, current_, next);
        cert_.g = compose(cert_.g, gs, next, current_, original_);
        current_ = next;
    }

    // eliminate the generator pair at a unit pivot d_j(p, q)
    void cancel_at(int j, std::size_t p, std::size_t q) {
        const GroupData& gd = current_.group();
        GroupRingMatrix d = current_.boundary(j);
        GroupRingElement u = d(p, q);
        GroupRingElement uinv = unit_inverse(u, gd);
        const std::size_t rj = current_.rank(j), rj1 = current_.rank(j - 1);

        auto skip = [](std::size_t idx, std::size_t cut) { return idx < cut ? idx : idx - 1; };

        // reduced boundary at j: a - b u^{-1} c
        GroupRingMatrix dj(rj1 - 1, rj - 1);
        for (std::size_t r = 0; r < rj1; ++r) {
            if (r == p) continue;
            for (std::size_t c = 0; c < rj; ++c) {
                if (c == q) continue;
                GroupRingElement corr = gr_mul(gr_mul(d(r, q), uinv, gd), d(p, c), gd);
                dj(skip(r, p), skip(c, q)) = d(r, c) - corr;
            }
        }
        GroupRingMatrix dj1_old = current_.boundary(j + 1);
        GroupRingMatrix dj1(rj - 1, dj1_old.cols());
        for (std::size_t r = 0; r < rj; ++r) {
            if (r == q) continue;
            for (std::size_t c = 0; c < dj1_old.cols(); ++c) dj1(skip(r, q), c) = dj1_old(r, c);
        }
        GroupRingMatrix djm_old = current_.boundary(j - 1);
        GroupRingMatrix djm(djm_old.rows(), rj1 - 1);
        for (std::size_t c = 0; c < rj1; ++c) {
            if (c == p) continue;
            for (std::size_t r = 0; r < djm_old.rows(); ++r) djm(r, skip(c, p)) = djm_old(r, c);
        }

        FreeChainComplex next = replace_boundaries(j, djm, dj, dj1, rj - 1, rj1 - 1);

        ChainMap fs = ChainMap::identity(next);
        ChainMap gs = ChainMap::identity(next);
        // f_j deletes coordinate q; f_{j-1}(y, z) = y - b u^{-1} z
        {
            GroupRingMatrix fj(rj - 1, rj);
            for (std::size_t c = 0; c < rj; ++c)
                if (c != q) fj(skip(c, q), c) = GroupRingElement::one();
            fs.blocks[j] = fj;
            GroupRingMatrix fj1(rj1 - 1, rj1);
            for (std::size_t c = 0; c < rj1; ++c) {
                if (c == p) {
                    for (std::size_t r = 0; r < rj1; ++r)
                        if (r != p) fj1(skip(r, p), c) = -gr_mul(d(r, q), uinv, gd);
                } else {
                    fj1(skip(c, p), c) = GroupRingElement::one();
                }
            }
            fs.blocks[j - 1] = fj1;
        }
        // g_j(x) = (x, -u^{-1} c x); g_{j-1} = inclusion
        {
            GroupRingMatrix gj(rj, rj - 1);
            for (std::size_t r = 0; r < rj; ++r) {
                if (r == q) {
                    for (std::size_t c = 0; c < rj; ++c)
                        if (c != q) gj(r, skip(c, q)) = -gr_mul(uinv, d(p, c), gd);
                } else {
                    gj(r, skip(r, q)) = GroupRingElement::one();
                }
            }
            gs.blocks[j] = gj;
            GroupRingMatrix gj1(rj1, rj1 - 1);
            for (std::size_t r = 0; r < rj1; ++r)
                if (r != p) gj1(r, skip(r, p)) = GroupRingElement::one();
            gs.blocks[j - 1] = gj1;
        }
        DegreeOneMap hs;
        {
            GroupRingMatrix h(rj, rj1);
            h(q, p) = -uinv;
            hs.blocks.emplace(j - 1, h);
        }
        apply(next, fs, gs, hs, DegreeOneMap{});
    }

    // append a trivial pair: one j-generator and one (j-1)-generator
    // with identity boundary between them
    void add_trivial_pair(int j) {
        ensure_degree(j);
        ensure_degree(j - 1);
        const std::size_t rj = current_.rank(j), rj1 = current_.rank(j - 1);
        GroupRingMatrix d = current_.boundary(j);
        GroupRingMatrix dj(rj1 + 1, rj + 1);
        for (std::size_t r = 0; r < rj1; ++r)
            for (std::size_t c = 0; c < rj; ++c) dj(r, c) = d(r, c);
        dj(rj1, rj) = GroupRingElement::one();
        GroupRingMatrix dj1_old = current_.boundary(j + 1);
        GroupRingMatrix dj1(rj + 1, dj1_old.cols());
        for (std::size_t r = 0; r < rj; ++r)
            for (std::size_t c = 0; c < dj1_old.cols(); ++c) dj1(r, c) = dj1_old(r, c);
        GroupRingMatrix djm_old = current_.boundary(j - 1);
        GroupRingMatrix djm(djm_old.rows(), rj1 + 1);
        for (std::size_t r = 0; r < djm_old.rows(); ++r)
            for (std::size_t c = 0; c < rj1; ++c) djm(r, c) = djm_old(r, c);

        FreeChainComplex next = replace_boundaries(j, djm, dj, dj1, rj + 1, rj1 + 1);
        ChainMap fs = ChainMap::identity(next);
        ChainMap gs = ChainMap::identity(next);
        {
            GroupRingMatrix fj(rj + 1, rj);
            for (std::size_t c = 0; c < rj; ++c) fj(c, c) = GroupRingElement::one();
            fs.blocks[j] = fj;
            GroupRingMatrix fj1(rj1 + 1, rj1);
            for (std::size_t c = 0; c < rj1; ++c) fj1(c, c) = GroupRingElement::one();
            fs.blocks[j - 1] = fj1;
            GroupRingMatrix gj(rj, rj + 1);
            for (std::size_t c = 0; c < rj; ++c) gj(c, c) = GroupRingElement::one();
            gs.blocks[j] = gj;
            GroupRingMatrix gj1(rj1, rj1 + 1);
            for (std::size_t c = 0; c < rj1; ++c) gj1(c, c) = GroupRingElement::one();
            gs.blocks[j - 1] = gj1;
        }
        DegreeOneMap hp;
        {
            GroupRingMatrix h(rj + 1, rj1 + 1);
            h(rj, rj1) = -GroupRingElement::one();
            hp.blocks.emplace(j - 1, h);
        }
        apply(next, fs, gs, DegreeOneMap{}, hp);
    }

    // basis change at degree d: d_d <- d_d * T, d_{d+1} <- Tinv * d_{d+1}
    void basis_change(int d, const GroupRingMatrix& t, const GroupRingMatrix& tinv) {
        const GroupData& gd = current_.group();
        if (t.mul(tinv, gd) != GroupRingMatrix::identity(t.rows()) ||
            tinv.mul(t, gd) != GroupRingMatrix::identity(t.rows()))
            throw std::logic_error("basis_change: T not invertible");
        GroupRingMatrix dd = current_.boundary(d).mul(t, gd);
        GroupRingMatrix dd1 = tinv.mul(current_.boundary(d + 1), gd);
        GroupRingMatrix ddm = current_.boundary(d - 1);
        FreeChainComplex next = replace_boundaries(d, ddm, dd, dd1, current_.rank(d), current_.rank(d - 1));
        ChainMap fs = ChainMap::identity(next);
        ChainMap gs = ChainMap::identity(next);
        fs.blocks[d] = tinv;
        gs.blocks[d] = t;
        apply(next, fs, gs, DegreeOneMap{}, DegreeOneMap{});
    }

private:
    // rebuild the current complex with boundaries at j-1, j, j+1 replaced
    // and ranks at j, j-1 set
    FreeChainComplex replace_boundaries(int j, const GroupRingMatrix& djm, const GroupRingMatrix& dj,
                                        const GroupRingMatrix& dj1, std::size_t rank_j, std::size_t rank_j1) {
        std::vector<std::size_t> ranks;
        std::vector<GroupRingMatrix> bnds;
        int bottom = current_.bottom_degree();
        for (int deg = bottom; deg <= current_.top_degree(); ++deg) {
            if (deg == j)
                ranks.push_back(rank_j);
            else if (deg == j - 1)
                ranks.push_back(rank_j1);
            else
                ranks.push_back(current_.rank(deg));
        }
        for (int deg = bottom + 1; deg <= current_.top_degree(); ++deg) {
            if (deg == j - 1)
                bnds.push_back(djm);
            else if (deg == j)
                bnds.push_back(dj);
            else if (deg == j + 1)
                bnds.push_back(dj1);
            else
                bnds.push_back(current_.boundary(deg));
        }
        return FreeChainComplex(current_.group(), bottom, std::move(ranks), std::move(bnds));
    }

    void ensure_degree(int j) {
        if (current_.ranks().empty()) {
            current_ = FreeChainComplex(current_.group(), j, {0}, {});
            return;
        }
        while (j < current_.bottom_degree()) {
            std::vector<std::size_t> ranks{0};
            for (std::size_t r : current_.ranks()) ranks.push_back(r);
            std::vector<GroupRingMatrix> bnds;
            bnds.push_back(GroupRingMatrix(0, current_.ranks()[0]));
            for (const auto& b : current_.boundaries()) bnds.push_back(b);
            current_ = FreeChainComplex(current_.group(), current_.bottom_degree() - 1, std::move(ranks),
                                        std::move(bnds));
        }
        while (j > current_.top_degree()) {
            std::vector<std::size_t> ranks = current_.ranks();
            ranks.push_back(0);
            std::vector<GroupRingMatrix> bnds = current_.boundaries();
            bnds.push_back(GroupRingMatrix(current_.ranks().back(), 0));
            current_ = FreeChainComplex(current_.group(), current_.bottom_degree(), std::move(ranks),
                                        std::move(bnds));
        }
    }

    FreeChainComplex original_;
    FreeChainComplex current_;
    HomotopyCertificate cert_;
};

inline std::optional<std::tuple<int, std::size_t, std::size_t>> find_unit_pivot(const FreeChainComplex& c,
                                                                                int k, int l) {
    for (int j = k; j <= l + 1; ++j) {
        if (c.rank(j) == 0 || c.rank(j - 1) == 0) continue;
        GroupRingMatrix d = c.boundary(j);
        for (std::size_t p = 0; p < d.rows(); ++p)
            for (std::size_t q = 0; q < d.cols(); ++q)
                if (d(p, q).is_unit_monomial()) return std::make_tuple(j, p, q);
    }
    return std::nullopt;
}

inline bool gap_empty(const FreeChainComplex& c, int k, int l) {
    for (int j = k; j <= l; ++j)
        if (c.rank(j) != 0) return false;
    return true;
}

inline void greedy_pass(CancelSession& s, int k, int l) {
    while (!gap_empty(s.current(), k, l)) {
        auto piv = find_unit_pivot(s.current(), k, l);
        if (!piv) break;
        auto [j, p, q] = *piv;
        s.cancel_at(j, p, q);
    }
}

}  // namespace detail

// Greedy unit-pivot cancellation of the gap degrees [k, l].
inline CancelResult cancel_gap(const FreeChainComplex& c, int k, int l) {
    if (auto err = c.validate()) throw std::invalid_argument("cancel_gap: invalid complex: " + err->reason);
    if (k > l || k < 1) throw std::invalid_argument("cancel_gap: bad degree range");
    detail::CancelSession s(c);
    detail::greedy_pass(s, k, l);
    CancelResult r;
    r.output = s.current();
    r.cert = s.certificate();
    r.success = detail::gap_empty(r.output, k, l);
    if (!r.success) r.note = "no unit pivot available; gap degrees not empty";
    return r;
}

// Witness-stabilized cancellation: greedy, then per-degree alignment of
// the boundary image to a free coordinate summand (using the silence
// witness B and an explicit conjugation witness), then killing each gap
// degree against the one above through an explicit splitting. Requires
// the complex to be silent on [k, l]; failure is reported, not forced.
inline CancelResult cancel_gap_stabilized(const FreeChainComplex& c, int k, int l,
                                          const TrivialityConfig& cfg = {}) {
    if (auto err = c.validate())
        throw std::invalid_argument("cancel_gap_stabilized: invalid complex: " + err->reason);
    if (k > l || k < 1) throw std::invalid_argument("cancel_gap_stabilized: bad degree range");
    detail::CancelSession s(c);
    detail::greedy_pass(s, k, l);
    CancelResult r;
    auto finish = [&](bool ok, const std::string& note) {
        r.output = s.current();
        r.cert = s.certificate();
        r.success = ok;
        r.note = note;
        return r;
    };
    if (detail::gap_empty(s.current(), k, l)) return finish(true, "greedy cancellation");

    const GroupData& g = c.group();

    // alignment at the bottom of the gap, when d_k is nonzero
    if (s.current().rank(k) > 0 && !s.current().boundary(k).is_zero()) {
        SilenceCertificate cert = silent_in_degree(s.current(), k);
        if (cert.kind != SilenceCertificate::Kind::silent)
            return finish(false, "complex is not silent in degree " + std::to_string(k));
        GroupRingMatrix e = s.current().boundary(k).mul(cert.retraction_witness, g);
        bool aligned = false;
        for (std::size_t stab = 0; stab <= cfg.stab_rank && !aligned; ++stab) {
            GroupRingMatrix es = stab == 0 ? e : GroupRingMatrix::block_diag(e, GroupRingMatrix::identity(stab));
            auto w = detail::diagonalize_idempotent(es, g, cfg);
            if (!w) continue;
            for (std::size_t i = 0; i < stab; ++i) s.add_trivial_pair(k);
            s.basis_change(k - 1, w->second, w->first);  // d_k <- W d_k, d_{k-1} <- d_{k-1} W^{-1}
            aligned = true;
        }
        if (!aligned) return finish(false, "no stable-freeness witness found for the degree-k boundary image");
        // image is now a 0/1 coordinate summand; expose unit pivots by a
        // column change built from an explicit splitting of d_k onto it
        GroupRingMatrix d = s.current().boundary(k);
        std::vector<std::size_t> supp;
        for (std::size_t row = 0; row < d.rows(); ++row) {
            bool nonzero = false;
            for (std::size_t col = 0; col < d.cols(); ++col)
                if (!d(row, col).is_zero()) nonzero = true;
            if (nonzero) supp.push_back(row);
        }
        if (!supp.empty()) {
            GroupRingMatrix rhs(d.rows(), supp.size());
            for (std::size_t i = 0; i < supp.size(); ++i) rhs(supp[i], i) = GroupRingElement::one();
            auto x = gr_solve_left(d, rhs, g);
            if (!x) return finish(false, "aligned boundary admits no splitting onto its image");
            // Pi = 1 - X * d'' projects onto ker(d_k)
            GroupRingMatrix dsupp(supp.size(), d.cols());
            for (std::size_t i = 0; i < supp.size(); ++i)
                for (std::size_t cix = 0; cix < d.cols(); ++cix) dsupp(i, cix) = d(supp[i], cix);
            bool done = false;
            for (std::size_t t = 0; t <= cfg.stab_rank && !done; ++t) {
                GroupRingMatrix pi = GroupRingMatrix::identity(d.cols()) - x->mul(dsupp, g);
                GroupRingMatrix pit = t == 0 ? pi : GroupRingMatrix::block_diag(pi, GroupRingMatrix::identity(t));
                auto v = detail::diagonalize_idempotent(pit, g, cfg);
                if (!v) continue;
                // assemble T = [X | K], Tinv = [d''; Lambda]
                GroupRingMatrix dpi = v->first.mul(pit, g).mul(v->second, g);
                std::vector<std::size_t> pis;
                for (std::size_t i = 0; i < dpi.rows(); ++i)
                    if (!dpi(i, i).is_zero()) pis.push_back(i);
                const std::size_t nct = d.cols() + t;
                if (supp.size() + pis.size() != nct) continue;
                for (std::size_t i = 0; i < t; ++i) s.add_trivial_pair(k + 1);
                GroupRingMatrix tmat(nct, nct), tinv(nct, nct);
                for (std::size_t i = 0; i < supp.size(); ++i)
                    for (std::size_t rix = 0; rix < d.cols(); ++rix) tmat(rix, i) = (*x)(rix, i);
                for (std::size_t i = 0; i < pis.size(); ++i)
                    for (std::size_t rix = 0; rix < nct; ++rix) tmat(rix, supp.size() + i) = v->second(rix, pis[i]);
                GroupRingMatrix dsup_ext(supp.size(), nct);
                for (std::size_t i = 0; i < supp.size(); ++i)
                    for (std::size_t cix = 0; cix < d.cols(); ++cix) dsup_ext(i, cix) = dsupp(i, cix);
                for (std::size_t i = 0; i < supp.size(); ++i)
                    for (std::size_t cix = 0; cix < nct; ++cix) tinv(i, cix) = dsup_ext(i, cix);
                for (std::size_t i = 0; i < pis.size(); ++i)
                    for (std::size_t cix = 0; cix < nct; ++cix) tinv(supp.size() + i, cix) = v->first(pis[i], cix);
                s.basis_change(k, tmat, tinv);
                done = true;
            }
            if (!done) return finish(false, "kernel of the aligned boundary admits no free-basis witness");
            detail::greedy_pass(s, k, l);
        }
    }

    // upward sweep: with degrees below j empty and H_j = 0, the next
    // boundary is onto; expose identity pivots through a splitting
    for (int j = k; j <= l; ++j) {
        if (s.current().rank(j) == 0) continue;
        if (!s.current().boundary(j).is_zero())
            return finish(false, "degree " + std::to_string(j) + " still carries boundary after sweep");
        GroupRingMatrix d1 = s.current().boundary(j + 1);
        auto x = gr_solve_left(d1, GroupRingMatrix::identity(s.current().rank(j)), g);
        if (!x)
            return finish(false, "boundary above degree " + std::to_string(j) +
                                     " is not onto (H_" + std::to_string(j) + " != 0?)");
        bool done = false;
        for (std::size_t t = 0; t <= cfg.stab_rank && !done; ++t) {
            GroupRingMatrix pi = GroupRingMatrix::identity(d1.cols()) - x->mul(d1, g);
            GroupRingMatrix pit = t == 0 ? pi : GroupRingMatrix::block_diag(pi, GroupRingMatrix::identity(t));
            auto v = detail::diagonalize_idempotent(pit, g, cfg);
            if (!v) continue;
            GroupRingMatrix dpi = v->first.mul(pit, g).mul(v->second, g);
            std::vector<std::size_t> pis;
            for (std::size_t i = 0; i < dpi.rows(); ++i)
                if (!dpi(i, i).is_zero()) pis.push_back(i);
            const std::size_t tau = s.current().rank(j);
            if (tau + pis.size() != d1.cols() + t) continue;
            for (std::size_t i = 0; i < t; ++i) s.add_trivial_pair(j + 2);
            GroupRingMatrix dj1 = s.current().boundary(j + 1);  // now has t extra zero columns
            const std::size_t nct = dj1.cols();
            GroupRingMatrix tmat(nct, nct), tinv(nct, nct);
            for (std::size_t i = 0; i < tau; ++i)
                for (std::size_t rix = 0; rix < d1.cols(); ++rix) tmat(rix, i) = (*x)(rix, i);
            for (std::size_t i = 0; i < pis.size(); ++i)
                for (std::size_t rix = 0; rix < nct; ++rix) tmat(rix, tau + i) = v->second(rix, pis[i]);
            for (std::size_t i = 0; i < tau; ++i)
                for (std::size_t cix = 0; cix < nct; ++cix) tinv(i, cix) = dj1(i, cix);
            for (std::size_t i = 0; i < pis.size(); ++i)
                for (std::size_t cix = 0; cix < nct; ++cix) tinv(tau + i, cix) = v->first(pis[i], cix);
            s.basis_change(j + 1, tmat, tinv);
            done = true;
        }
        if (!done)
            return finish(false, "no free-basis witness for the cycle module above degree " + std::to_string(j));
        detail::greedy_pass(s, k, l);
        if (s.current().rank(j) != 0)
            return finish(false, "degree " + std::to_string(j) + " not emptied after splitting");
    }
    return finish(detail::gap_empty(s.current(), k, l), detail::gap_empty(s.current(), k, l)
                                                            ? "stabilized cancellation"
                                                            : "gap not emptied");
}

}  // namespace zgc
