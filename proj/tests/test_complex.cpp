#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "zgchain/cohomology.hpp"

using namespace zgc;
using fix::gre;

namespace {

// independent homology of a complex over the trivial group: plain
// integer Smith-form computation on the given boundary matrices
AbelianGroup direct_integer_homology(const std::vector<IntMatrix>& boundaries,
                                     const std::vector<std::size_t>& ranks, std::size_t j) {
    // boundaries[i]: ranks[i] x ranks[i+1]
    IntMatrix dj = j < boundaries.size() + 1 && j >= 1 ? boundaries[j - 1] : IntMatrix(0, ranks[j]);
    IntMatrix k = j == 0 ? IntMatrix::identity(ranks[0]) : kernel_basis(boundaries[j - 1]);
    IntMatrix im = j < boundaries.size() ? boundaries[j] : IntMatrix(ranks[j], 0);
    (void)dj;
    return lattice_quotient(k, im);
}

}  // namespace

TEST_CASE("validation") {
    REQUIRE_FALSE(fix::point(GroupData::trivial()).validate().has_value());
    REQUIRE_FALSE(fix::rp2(fix::c2()).validate().has_value());
    // corrupt d2 = 1+2t: (t-1)(1+2t) = 1 - t != 0
    GroupRingMatrix d1(1, 1), d2(1, 1);
    d1(0, 0) = gre({{-1, 0}, {1, 1}});
    d2(0, 0) = gre({{1, 0}, {2, 1}});
    FreeChainComplex bad(fix::c2(), 0, {1, 1, 1}, {d1, d2});
    auto err = bad.validate();
    REQUIRE(err.has_value());
    REQUIRE(err->degree == 2);
    // dimension mismatch
    FreeChainComplex mism(fix::c2(), 0, {1, 2}, {GroupRingMatrix(1, 1)});
    REQUIRE(mism.validate().has_value());
}

TEST_CASE("homology of the RP2 model (universal cover S2)") {
    FreeChainComplex c = fix::rp2(fix::c2());
    REQUIRE(homology_group(c, 2).to_string() == "Z");
    REQUIRE(homology_group(c, 1).is_trivial());
    REQUIRE(homology_group(c, 0).to_string() == "Z");
    REQUIRE(homology_group(c, 5).is_trivial());
    REQUIRE(homology_group(FreeChainComplex::empty(fix::c2()), 0).is_trivial());
}

TEST_CASE("homology module carries a consistent left action") {
    FreeChainComplex c = fix::rp2(fix::c2());
    FPModule h2 = homology_module(c, 2);
    REQUIRE(h2.underlying_group().to_string() == "Z");
    // action is a homomorphism modulo relations
    const GroupData& g = c.group();
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            IntMatrix lhs = h2.action[a] * h2.action[b];
            IntMatrix rhs = h2.action[g.mult(a, b)];
            IntMatrix diff = lhs - rhs;
            for (std::size_t col = 0; col < diff.cols(); ++col)
                REQUIRE((h2.relations.cols() == 0 ? diff.column(col) == std::vector<Int>(diff.rows(), 0)
                                                  : lattice_contains(h2.relations, diff.column(col))));
        }
    // deck transformation acts by -1 on H_2 of the sphere
    REQUIRE(h2.action[1](0, 0) == -1);
}

TEST_CASE("homology over the trivial group matches the direct integer computation") {
    GroupData t = GroupData::trivial();
    fix::Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        // random two-boundary integer complex with d1*d2 = 0: build d2 from kernel of d1
        std::size_t r0 = 1 + rng.next() % 3, r1 = 1 + rng.next() % 3;
        GroupRingMatrix d1(r0, r1);
        for (std::size_t i = 0; i < r0; ++i)
            for (std::size_t j = 0; j < r1; ++j) d1(i, j) = GroupRingElement::term(rng.pick(-2, 2), 0);
        IntMatrix k = kernel_basis(flatten(d1, t));
        std::size_t r2 = k.cols();
        GroupRingMatrix d2(r1, r2);
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < r2; ++j) d2(i, j) = GroupRingElement::term(k(i, j), 0);
        FreeChainComplex c(t, 0, {r0, r1, r2}, {d1, d2});
        REQUIRE_FALSE(c.validate().has_value());
        std::vector<IntMatrix> ints{flatten(d1, t), flatten(d2, t)};
        for (std::size_t j = 0; j <= 2; ++j)
            REQUIRE(homology_group(c, static_cast<int>(j)) ==
                    direct_integer_homology(ints, {r0, r1, r2}, j));
    }
}

TEST_CASE("euler characteristic identities") {
    for (const FreeChainComplex& c :
         {fix::rp2(fix::c2()), fix::sphere(3), fix::point(fix::s3()), fix::chi_zero()}) {
        Int chi = c.flattened_euler_characteristic();
        REQUIRE(chi == c.euler_characteristic() * Int(c.group().order()));
        Int hsum = 0;
        for (int j = c.bottom_degree(); j <= c.top_degree(); ++j) {
            Int term = Int(homology_group(c, j).free_rank);
            if (((j % 2) + 2) % 2 == 1) term = -term;
            hsum += term;
        }
        REQUIRE(chi == hsum);
    }
}

TEST_CASE("cohomology with local coefficients") {
    FreeChainComplex c = fix::rp2(fix::c2());
    REQUIRE(cohomology_local(c, LatticeModule::trivial(fix::c2()), 2).to_string() == "Z/2");
    REQUIRE(cohomology_local(c, LatticeModule::zero(fix::c2()), 2).is_trivial());
    REQUIRE(cohomology_local(c, LatticeModule::regular(fix::c2()), 2).is_trivial());
    REQUIRE(cohomology_local(c, LatticeModule::trivial(fix::c2()), 0).to_string() == "Z");
    REQUIRE(cohomology_local(c, LatticeModule::trivial(fix::c2()), 1).is_trivial());
    REQUIRE_THROWS_AS(cohomology_local(c, LatticeModule::trivial(fix::c3()), 1), std::invalid_argument);
}

TEST_CASE("regular coefficients match the dual flattened complex") {
    // H^j(C; ZG) has the underlying group of the homology of the
    // Z-dual flattened complex
    for (const FreeChainComplex& c : {fix::rp2(fix::c2()), fix::rp2(fix::c2_oriented()), fix::sphere(2)}) {
        for (int j = c.bottom_degree(); j <= c.top_degree(); ++j) {
            AbelianGroup lhs = cohomology_local(c, LatticeModule::regular(c.group()), j);
            // dual complex at j: ker(d_{j+1}^T) / im(d_j^T)
            IntMatrix up = c.flatten_boundary(j + 1).transpose();
            IntMatrix down = c.flatten_boundary(j).transpose();
            IntMatrix k = c.rank(j + 1) == 0 ? IntMatrix::identity(c.flattened_rank(j)) : kernel_basis(up);
            AbelianGroup rhs = lattice_quotient(k, down);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("lattice module validation") {
    REQUIRE_FALSE(LatticeModule::regular(fix::s3()).validate().has_value());
    REQUIRE_FALSE(LatticeModule::augmentation_ideal(fix::s3()).validate().has_value());
    REQUIRE_FALSE(LatticeModule::trivial(fix::q8()).validate().has_value());
    LatticeModule broken = LatticeModule::regular(fix::c2());
    broken.action[1](0, 0) = 5;
    REQUIRE(broken.validate().has_value());
}

TEST_CASE("relative homology") {
    FreeChainComplex c = fix::rp2(fix::c2());
    // X = T: everything vanishes
    SubcomplexDesignation full = fix::full_designation(c);
    for (int j = 0; j <= 2; ++j) REQUIRE(relative_homology_group(c, full, j).is_trivial());
    // rel the 1-skeleton: quotient is ZC2 in degree 2
    SubcomplexDesignation skel;
    skel.bottom_degree = 0;
    skel.columns = {{0}, {0}, {}};
    FPModule h2 = relative_homology(c, skel, 2);
    REQUIRE(h2.underlying_group().free_rank == 2);
    REQUIRE(h2.relations.cols() == 0);
    // free generator attached by zero boundary: quotient keeps ZG
    GroupData g = fix::c2();
    FreeChainComplex t(g, 0, {1, 1}, {GroupRingMatrix(1, 1)});
    SubcomplexDesignation base;
    base.bottom_degree = 0;
    base.columns = {{0}, {}};
    REQUIRE(relative_homology_group(t, base, 1).free_rank == 2);
    // designation not closed under the boundary is rejected
    SubcomplexDesignation open_d;
    open_d.bottom_degree = 0;
    open_d.columns = {{}, {0}, {}};
    REQUIRE(check_subcomplex(fix::rp2(fix::c2()), open_d).has_value());
}
