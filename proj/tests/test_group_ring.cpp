#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "zgchain/gr_matrix.hpp"

using namespace zgc;
using fix::gre;

TEST_CASE("group validation catches broken tables") {
    REQUIRE_FALSE(fix::c2().validate().has_value());
    REQUIRE_FALSE(fix::s3().validate().has_value());
    REQUIRE(fix::s3().order() == 6);
    REQUIRE(fix::q8().order() == 8);
    // identity not at 0
    REQUIRE_THROWS_AS(GroupData("bad", {"a", "e"}, {{1, 0}, {0, 1}}, {1, 1}), std::invalid_argument);
    // omega not a homomorphism
    REQUIRE_THROWS_AS(GroupData("bad", {"e", "t"}, {{0, 1}, {1, 0}}, {1, 1,}), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupData("bad", {"e", "t", "s"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {1, -1, 1}),
                      std::invalid_argument);
}

TEST_CASE("spec multiplication examples") {
    GroupData g = fix::c2();
    REQUIRE(gr_mul(gre({{1, 0}, {1, 1}}), gre({{1, 0}, {-1, 1}}), g).is_zero());
    GroupRingElement a = gre({{3, 0}, {-2, 1}});
    REQUIRE(gr_mul(a, GroupRingElement::one(), g) == a);
    GroupData c3 = fix::c3();
    REQUIRE(gr_mul(gre({{1, 0}, {1, 1}}), gre({{1, 0}, {1, 1}}), c3) == gre({{1, 0}, {2, 1}, {1, 2}}));
}

TEST_CASE("convolution against a brute-force oracle") {
    GroupData g = fix::s3();
    fix::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        GroupRingElement a = fix::random_element(rng, g, 3, 4);
        GroupRingElement b = fix::random_element(rng, g, 3, 4);
        GroupRingElement slow;
        for (std::size_t x = 0; x < g.order(); ++x)
            for (std::size_t y = 0; y < g.order(); ++y) slow.add_term(a.coeff(x) * b.coeff(y), g.mult(x, y));
        REQUIRE(gr_mul(a, b, g) == slow);
    }
}

TEST_CASE("ring axioms on random elements") {
    for (const GroupData& g : {fix::c2(), fix::c3(), fix::s3(), fix::q8()}) {
        fix::Rng rng(29 + g.order());
        for (int trial = 0; trial < 20; ++trial) {
            GroupRingElement a = fix::random_element(rng, g, 2, 3);
            GroupRingElement b = fix::random_element(rng, g, 2, 3);
            GroupRingElement c = fix::random_element(rng, g, 2, 3);
            REQUIRE(gr_mul(gr_mul(a, b, g), c, g) == gr_mul(a, gr_mul(b, c, g), g));
            REQUIRE(gr_mul(a, b + c, g) == gr_mul(a, b, g) + gr_mul(a, c, g));
            REQUIRE(gr_mul(b + c, a, g) == gr_mul(b, a, g) + gr_mul(c, a, g));
        }
    }
}

TEST_CASE("involution") {
    GroupData g = fix::c2_oriented();  // omega(t) = -1
    REQUIRE(involute(gre({{2, 0}, {3, 1}}), g) == gre({{2, 0}, {-3, 1}}));
    GroupData c3 = fix::c3();
    REQUIRE(involute(gre({{1, 0}, {2, 1}}), c3) == gre({{1, 0}, {2, 2}}));
    for (const GroupData& gd : {fix::c2(), fix::c2_oriented(), fix::s3()}) {
        fix::Rng rng(31 + gd.order() + static_cast<std::uint64_t>(gd.omega(gd.order() - 1) + 2));
        for (int trial = 0; trial < 20; ++trial) {
            GroupRingElement a = fix::random_element(rng, gd, 3, 3);
            GroupRingElement b = fix::random_element(rng, gd, 3, 3);
            REQUIRE(involute(involute(a, gd), gd) == a);
            REQUIRE(involute(gr_mul(a, b, gd), gd) == gr_mul(involute(b, gd), involute(a, gd), gd));
        }
    }
}

TEST_CASE("flatten of 1+t over C2") {
    GroupData g = fix::c2();
    GroupRingMatrix m(1, 1);
    m(0, 0) = gre({{1, 0}, {1, 1}});
    IntMatrix f = flatten(m, g);
    REQUIRE(f(0, 0) == 1);
    REQUIRE(f(0, 1) == 1);
    REQUIRE(f(1, 0) == 1);
    REQUIRE(f(1, 1) == 1);
    REQUIRE(flatten(GroupRingMatrix::identity(3), g) == IntMatrix::identity(6));
    REQUIRE(flatten(GroupRingMatrix(2, 2), g).is_zero());
}

TEST_CASE("flatten is a ring homomorphism") {
    for (const GroupData& g : {fix::c3(), fix::s3()}) {
        fix::Rng rng(37 + g.order());
        for (int trial = 0; trial < 12; ++trial) {
            GroupRingMatrix a = fix::random_matrix(rng, g, 2, 3, 2, 2);
            GroupRingMatrix b = fix::random_matrix(rng, g, 3, 2, 2, 2);
            REQUIRE(flatten(a.mul(b, g), g) == flatten(a, g) * flatten(b, g));
            GroupRingMatrix c = fix::random_matrix(rng, g, 2, 3, 2, 2);
            REQUIRE(flatten(a + c, g) == flatten(a, g) + flatten(c, g));
        }
    }
}

TEST_CASE("flatten interacts with the involute-transpose by the omega sign") {
    // flatten(M*)^T = (I (x) D_omega) flatten(M) (I (x) D_omega)
    auto sign_diag = [](const GroupData& g, std::size_t n) {
        IntMatrix d(n * g.order(), n * g.order());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t h = 0; h < g.order(); ++h) d(i * g.order() + h, i * g.order() + h) = g.omega(h);
        return d;
    };
    GroupData s3o("S3o", fix::s3().element_names(), fix::s3().table(), [] {
        // sign character: omega = -1 exactly on the three transpositions
        GroupData s = fix::s3();
        std::vector<int> om(s.order());
        for (std::size_t e = 0; e < s.order(); ++e) om[e] = s.element_order(e) == 2 ? -1 : 1;
        return om;
    }());
    for (const GroupData& g : {fix::c2_oriented(), s3o, fix::c3()}) {
        fix::Rng rng(41 + g.order());
        for (int trial = 0; trial < 10; ++trial) {
            GroupRingMatrix m = fix::random_matrix(rng, g, 2, 2, 2, 3);
            IntMatrix lhs = flatten(m.involute_transpose(g), g).transpose();
            IntMatrix rhs = sign_diag(g, 2) * flatten(m, g) * sign_diag(g, 2);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("sandwich solver finds retraction systems") {
    GroupData g = fix::c2();
    GroupRingMatrix d(1, 1);
    d(0, 0) = gre({{1, 0}, {1, 1}});  // 1+t: no B with (1+t)B(1+t) = 1+t
    REQUIRE_FALSE(gr_solve_sandwich(d, g).has_value());
    GroupRingMatrix id = GroupRingMatrix::identity(2);
    auto b = gr_solve_sandwich(id, g);
    REQUIRE(b.has_value());
    REQUIRE(id.mul(*b, g).mul(id, g) == id);
    // a genuinely solvable non-identity case
    GroupRingMatrix e = fix::conjugated_idempotent(g, 1, 1);
    auto be = gr_solve_sandwich(e, g);
    REQUIRE(be.has_value());
    REQUIRE(e.mul(*be, g).mul(e, g) == e);
}

TEST_CASE("left solver solves ZG systems exactly") {
    GroupData g = fix::c3();
    fix::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        GroupRingMatrix a = fix::random_matrix(rng, g, 2, 2, 2, 2);
        GroupRingMatrix x = fix::random_matrix(rng, g, 2, 2, 2, 2);
        GroupRingMatrix c = a.mul(x, g);
        auto sol = gr_solve_left(a, c, g);
        REQUIRE(sol.has_value());
        REQUIRE(a.mul(*sol, g) == c);
    }
    // unsolvable: (1+t)X = 1 over C2 (1+t is a zero divisor)
    GroupData c2 = fix::c2();
    GroupRingMatrix a(1, 1), one(1, 1);
    a(0, 0) = gre({{1, 0}, {1, 1}});
    one(0, 0) = GroupRingElement::one();
    REQUIRE_FALSE(gr_solve_left(a, one, c2).has_value());
}
