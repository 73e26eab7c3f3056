#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "minvar/error.hpp"
#include "minvar/exactlat.hpp"

using namespace minvar;
using minvar::test::g1;

namespace {

bool diagonal_with_chain(const IntMatrix& s)
{
    Integer prev = 1;
    bool zero_seen = false;
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            if (i != j && s(i, j) != 0)
                return false;
            if (i == j) {
                if (s(i, i) < 0)
                    return false;
                if (s(i, i) == 0) {
                    zero_seen = true;
                } else {
                    if (zero_seen || s(i, i) % prev != 0)
                        return false;
                    prev = s(i, i);
                }
            }
        }
    return true;
}

IntVector vec(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

Sublattice lattice(std::size_t n, std::initializer_list<std::initializer_list<long>> cols)
{
    std::vector<IntVector> c;
    for (auto col : cols)
        c.push_back(vec(col));
    return Sublattice::from_generators(n, IntMatrix::from_columns(n, c));
}

}  // namespace

TEST_CASE("snf: worked examples")
{
    SUBCASE("diag(2,3)")
    {
        auto f = snf(IntMatrix{{2, 0}, {0, 3}});
        CHECK(f.S == IntMatrix{{1, 0}, {0, 6}});
        CHECK(f.U * IntMatrix{{2, 0}, {0, 3}} * f.V == f.S);
    }
    SUBCASE("zero matrix")
    {
        auto f = snf(IntMatrix(2, 2));
        CHECK(f.S.is_zero());
        CHECK(f.U == IntMatrix::identity(2));
        CHECK(f.V == IntMatrix::identity(2));
        CHECK(f.rank == 0);
    }
    SUBCASE("g1 - I")
    {
        IntMatrix m = g1() - IntMatrix::identity(3);
        auto f = snf(m);
        CHECK(f.S == IntMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 0}});
        CHECK(f.U * m * f.V == f.S);
        CHECK(abs(f.U.det()) == 1);
        CHECK(abs(f.V.det()) == 1);
    }
}

TEST_CASE("rank: examples")
{
    CHECK(rank(IntMatrix::identity(4)) == 4);
    CHECK(rank(-IntMatrix::identity(3) - IntMatrix::identity(3)) == 3);
    CHECK(rank(g1() - IntMatrix::identity(3)) == 2);
    CHECK(rank(IntMatrix(3, 5)) == 0);
}

TEST_CASE("snf and rank: random property checks")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix m = test::random_matrix(rng, r, c, -9, 9);
        if (trial % 5 == 0)  // force rank deficiency
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = m(0, j) * 2;
        auto f = snf(m);
        REQUIRE(f.U * m * f.V == f.S);
        CHECK(diagonal_with_chain(f.S));
        CHECK(abs(f.U.det()) == 1);
        CHECK(abs(f.V.det()) == 1);
        CHECK(rank(m) == f.rank);
        IntMatrix k = kernel_basis(m);
        CHECK(rank(m) + k.cols() == c);
        CHECK((m * k).is_zero());
    }
}

TEST_CASE("unimodular inverse and determinant")
{
    IntMatrix t{{2, 1}, {1, 1}};
    auto ti = unimodular_inverse(t);
    REQUIRE(ti);
    CHECK(t * *ti == IntMatrix::identity(2));
    CHECK_FALSE(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
    CHECK(IntMatrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}).det() == -3);
}

TEST_CASE("column hnf is canonical")
{
    // same lattice from two generating sets
    IntMatrix a{{2, 0}, {0, 3}};
    IntMatrix b{{2, 4, 2}, {3, 3, 6}};
    auto ha = column_hnf(a);
    CHECK(ha.cols() == 2);
    // b spans a different lattice; check invariance under unimodular change instead
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = test::random_matrix(rng, 3, 3, -5, 5);
        IntMatrix t = test::random_unimodular(rng, 3);
        CHECK(column_hnf(m) == column_hnf(m * t));
    }
    (void)b;
}

TEST_CASE("fixed_lattice")
{
    std::vector<IntMatrix> id{IntMatrix::identity(3)};
    CHECK(fixed_lattice(id) == Sublattice::full(3));
    std::vector<IntMatrix> inv{test::minus_identity(4)};
    CHECK(fixed_lattice(inv).rank() == 0);
    std::vector<IntMatrix> g{g1()};
    auto f = fixed_lattice(g);
    CHECK(f == lattice(3, {{0, 1, 1}}));
    CHECK(f.saturated());
    std::vector<IntMatrix> bad{IntMatrix::identity(2), IntMatrix::identity(3)};
    CHECK_THROWS_AS(fixed_lattice(bad), InvalidInput);
}

TEST_CASE("moved_lattice")
{
    std::vector<IntMatrix> id{IntMatrix::identity(3)};
    CHECK(moved_lattice(id).rank() == 0);
    std::vector<IntMatrix> inv{test::minus_identity(2)};
    auto m2 = moved_lattice(inv);
    CHECK(m2 == lattice(2, {{2, 0}, {0, 2}}));
    CHECK_FALSE(m2.saturated());
    std::vector<IntMatrix> g{g1()};
    CHECK(moved_lattice(g) == lattice(3, {{2, 0, 0}, {0, 1, -1}}));
}

TEST_CASE("quotient_invariants")
{
    auto q = quotient_invariants(Sublattice::full(3));
    CHECK(q.free_rank == 0);
    CHECK(q.torsion.empty());
    q = quotient_invariants(lattice(2, {{2, 0}, {0, 2}}));
    CHECK(q.free_rank == 0);
    CHECK(q.torsion == IntVector{2, 2});
    std::vector<IntMatrix> g{g1()};
    q = quotient_invariants(moved_lattice(g));
    CHECK(q.free_rank == 1);
    CHECK(q.torsion == IntVector{2});
}

TEST_CASE("sublattice membership, intersection and saturation")
{
    auto a = lattice(2, {{2, 0}, {0, 1}});
    auto b = lattice(2, {{1, 0}, {0, 3}});
    auto c = a.intersect(b);
    CHECK(c == lattice(2, {{2, 0}, {0, 3}}));
    CHECK(a.contains(vec({4, 7})));
    CHECK_FALSE(a.contains(vec({3, 0})));
    auto s = lattice(3, {{2, 2, 0}}).saturation();
    CHECK(s == lattice(3, {{1, 1, 0}}));
    CHECK(lattice(3, {{2, 2, 0}}).intersect(lattice(3, {{0, 0, 1}})).rank() == 0);
}

TEST_CASE("covers: examples")
{
    SUBCASE("Z by 2Z and 3Z")
    {
        std::vector<Sublattice> parts{lattice(1, {{2}}), lattice(1, {{3}})};
        auto r = covers(Sublattice::full(1), parts);
        CHECK_FALSE(r.covered);
        REQUIRE(r.witness);
        CHECK(*r.witness == vec({1}));
    }
    SUBCASE("Z^2 by the three index-2 subgroups")
    {
        std::vector<Sublattice> parts{lattice(2, {{2, 0}, {0, 1}}), lattice(2, {{1, 0}, {0, 2}}),
                                      lattice(2, {{1, 1}, {0, 2}})};
        auto r = covers(Sublattice::full(2), parts);
        CHECK(r.covered);
        CHECK_FALSE(r.witness);
    }
    SUBCASE("empty part list")
    {
        std::vector<Sublattice> parts;
        auto r = covers(Sublattice::full(2), parts);
        CHECK_FALSE(r.covered);
        CHECK(*r.witness == vec({0, 0}));
    }
    SUBCASE("rank-deficient parts never cover")
    {
        std::vector<Sublattice> parts{lattice(2, {{1, 0}}), lattice(2, {{0, 1}}), lattice(2, {{1, 1}})};
        auto r = covers(Sublattice::full(2), parts);
        CHECK_FALSE(r.covered);
        REQUIRE(r.witness);
        for (const auto& p : parts)
            CHECK_FALSE(p.contains(*r.witness));
    }
    SUBCASE("rank-zero ambient")
    {
        std::vector<Sublattice> parts{Sublattice::zero(2)};
        CHECK(covers(Sublattice::zero(2), parts).covered);
    }
    SUBCASE("part outside ambient")
    {
        std::vector<Sublattice> parts{lattice(2, {{1, 0}})};
        CHECK_THROWS_AS(covers(lattice(2, {{2, 0}}), parts), InvalidInput);
    }
}

TEST_CASE("covers agrees with box enumeration")
{
    std::mt19937 rng(2024);
    int covered_count = 0, uncovered_count = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        IntMatrix amb_gens = IntMatrix::identity(n);
        if (rng() % 3 == 0)
            amb_gens = test::random_matrix(rng, n, n, -2, 2);
        Sublattice ambient = Sublattice::from_generators(n, amb_gens);
        const std::size_t r = ambient.rank();
        std::vector<Sublattice> parts;
        const std::size_t np = 1 + rng() % 4;
        for (std::size_t k = 0; k < np; ++k) {
            IntMatrix c = test::random_matrix(rng, r, r, -2, 2);
            for (std::size_t i = 0; i < r; ++i)  // bias toward small index
                if (rng() % 2)
                    for (std::size_t j = 0; j < r; ++j)
                        c(i, j) = i == j ? 1 : 0;
            parts.push_back(Sublattice::from_generators(n, ambient.basis() * c));
        }
        auto res = covers(ambient, parts);

        // enumerate ambient points with coefficients in a box of side 6
        bool found_uncovered = false;
        std::vector<long> x(r, -3);
        for (;;) {
            IntVector v(n, Integer(0));
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    v[i] += x[j] * ambient.basis()(i, j);
            bool in_part = false;
            for (const auto& p : parts)
                in_part = in_part || p.contains(v);
            found_uncovered = found_uncovered || !in_part;
            std::size_t k = 0;
            while (k < r && x[k] == 3)
                x[k++] = -3;
            if (k == r)
                break;
            ++x[k];
        }
        if (res.covered) {
            ++covered_count;
            CHECK_FALSE(found_uncovered);
        } else {
            ++uncovered_count;
            REQUIRE(res.witness);
            CHECK(ambient.contains(*res.witness));
            for (const auto& p : parts)
                CHECK_FALSE(p.contains(*res.witness));
        }
        if (found_uncovered)
            CHECK_FALSE(res.covered);
    }
    CHECK(covered_count > 5);
    CHECK(uncovered_count > 5);
}

TEST_CASE("rank duality for fixed and moved lattices")
{
    std::mt19937 rng(99);
    std::vector<IntMatrix> gs{g1(), test::minus_identity(3), test::permutation({1, 2, 0}),
                              IntMatrix{{0, -1}, {1, 0}}};
    for (const auto& g : gs) {
        IntMatrix t = test::random_unimodular(rng, g.rows());
        IntMatrix c = t * g * *unimodular_inverse(t);
        std::vector<IntMatrix> e{c};
        CHECK(fixed_lattice(e).rank() + moved_lattice(e).rank() == g.rows());
        CHECK(quotient_invariants(fixed_lattice(e)).torsion.empty());
    }
}
