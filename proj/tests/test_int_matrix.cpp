#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "zgchain/int_matrix.hpp"

using namespace zgc;

namespace {

IntMatrix from(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

void check_smith(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    REQUIRE(f.u * a * f.v == f.d);
    REQUIRE(abs(determinant(f.u)) == 1);
    REQUIRE(abs(determinant(f.v)) == 1);
    std::size_t dmin = std::min(f.d.rows(), f.d.cols());
    for (std::size_t i = 0; i < f.d.rows(); ++i)
        for (std::size_t j = 0; j < f.d.cols(); ++j)
            if (i != j) REQUIRE(f.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < dmin; ++i) {
        REQUIRE(f.d(i, i) >= 0);
        if (f.d(i + 1, i + 1) != 0) {
            REQUIRE(f.d(i, i) != 0);
            REQUIRE(f.d(i + 1, i + 1) % f.d(i, i) == 0);
        }
    }
}

}  // namespace

TEST_CASE("smith normal form on the spec cases") {
    SmithForm f = smith_normal_form(from({{2, 0}, {0, 3}}));
    REQUIRE(f.d(0, 0) == 1);
    REQUIRE(f.d(1, 1) == 6);
    check_smith(from({{2, 0}, {0, 3}}));

    IntMatrix id = IntMatrix::identity(3);
    REQUIRE(smith_normal_form(id).d == id);
    IntMatrix z(2, 3);
    REQUIRE(smith_normal_form(z).d == z);
}

TEST_CASE("smith normal form on random matrices") {
    fix::Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng.next() % 5, c = 1 + rng.next() % 5;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.pick(-6, 6);
        check_smith(m);
    }
}

TEST_CASE("integer solving matches the spec examples") {
    auto x = solve(from({{2}}), {Int(4)});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] == 2);
    REQUIRE_FALSE(solve(from({{2}}), {Int(3)}).has_value());

    IntMatrix a = from({{1, 1}, {0, 2}});
    auto y = solve(a, {Int(1), Int(2)});
    REQUIRE(y.has_value());
    REQUIRE(a.column(0)[0] * (*y)[0] + a.column(1)[0] * (*y)[1] == 1);
    REQUIRE(a.column(0)[1] * (*y)[0] + a.column(1)[1] * (*y)[1] == 2);
}

TEST_CASE("integer solving agrees with exhaustive search in a box") {
    fix::Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + rng.next() % 2, c = 1 + rng.next() % 2;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = rng.pick(-3, 3);
        std::vector<Int> b(r);
        for (std::size_t i = 0; i < r; ++i) b[i] = rng.pick(-3, 3);
        bool solver = solve(a, b).has_value();
        // brute force over x in [-9, 9]^c (bounds generous for 2x2/[-3,3])
        bool brute = false;
        std::vector<long> x(c, -9);
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i) {
                Int s = 0;
                for (std::size_t j = 0; j < c; ++j) s += a(i, j) * Int(x[j]);
                ok = s == b[i];
            }
            if (ok) {
                brute = true;
                break;
            }
            std::size_t k = 0;
            while (k < c && x[k] == 9) x[k++] = -9;
            if (k == c) break;
            ++x[k];
        }
        if (solver) {
            auto sol = solve(a, b);
            for (std::size_t i = 0; i < r; ++i) {
                Int s = 0;
                for (std::size_t j = 0; j < c; ++j) s += a(i, j) * (*sol)[j];
                REQUIRE(s == b[i]);
            }
        }
        REQUIRE(solver == brute);
    }
}

TEST_CASE("kernel basis spans the kernel") {
    fix::Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.next() % 4, c = 1 + rng.next() % 4;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = rng.pick(-4, 4);
        IntMatrix k = kernel_basis(a);
        REQUIRE((a * k).is_zero());
        REQUIRE(k.cols() == c - rank(a));
        if (k.cols() > 0) REQUIRE(rank(k) == k.cols());
    }
}

TEST_CASE("hermite basis preserves the column span") {
    fix::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.next() % 4, c = 1 + rng.next() % 4;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = rng.pick(-4, 4);
        IntMatrix h = column_hermite_basis(a);
        REQUIRE(h.cols() == rank(a));
        // every original column in span(h), every h column in span(a)
        REQUIRE(solve_matrix(h, a).has_value());
        if (h.cols() > 0) REQUIRE(solve_matrix(a, h).has_value());
        REQUIRE(column_hermite_basis(h) == h);
    }
}

TEST_CASE("cokernel invariant factors") {
    AbelianGroup g = cokernel_group(from({{2, 0}, {0, 3}}));
    REQUIRE(g.torsion == std::vector<Int>{Int(6)});
    REQUIRE(g.free_rank == 0);
    AbelianGroup z = cokernel_group(IntMatrix(2, 0));
    REQUIRE(z.free_rank == 2);
    REQUIRE(z.torsion.empty());
}

TEST_CASE("lattice quotient") {
    // K = span{2e1, e2}, I = span{4e1, 2e2}: K/I = Z/2 + Z/2
    IntMatrix k = from({{2, 0}, {0, 1}});
    IntMatrix i = from({{4, 0}, {0, 2}});
    AbelianGroup q = lattice_quotient(k, i);
    REQUIRE(q.free_rank == 0);
    REQUIRE(q.torsion == std::vector<Int>({Int(2), Int(2)}));
    AbelianGroup f = lattice_quotient(k, IntMatrix(2, 0));
    REQUIRE(f.free_rank == 2);
}

TEST_CASE("non-membership functionals") {
    IntMatrix gens = from({{2, 0}, {0, 1}});
    auto w = non_membership_functional(gens, {Int(1), Int(0)});
    REQUIRE(w.has_value());
    // phi * gens == 0 mod m, phi * v != 0 mod m
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        Int s = w->phi[0] * gens(0, j) + w->phi[1] * gens(1, j);
        if (w->modulus != 0) s %= w->modulus;
        REQUIRE(s == 0);
    }
    Int pv = w->phi[0];
    if (w->modulus != 0) pv %= w->modulus;
    REQUIRE(pv != 0);
    REQUIRE_FALSE(non_membership_functional(gens, {Int(2), Int(5)}).has_value());
}
