#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "minvar/error.hpp"
#include "minvar/matgroup.hpp"

using namespace minvar;
using namespace minvar::test;

TEST_CASE("generate: orders")
{
    CHECK(cyclic_group(minus_identity(3)).order() == 2);
    CHECK(symmetric3().order() == 6);
    CHECK(cyclic_group(g1()).order() == 2);
    CHECK(symmetric4().order() == 24);
    CHECK(cyclic_group(IntMatrix{{0, -1}, {1, 0}}).order() == 4);
}

TEST_CASE("generate: errors")
{
    std::vector<IntMatrix> singular{IntMatrix{{2, 0}, {0, 1}}};
    CHECK_THROWS_AS(MatGroup::generate(singular), NonUnimodular);
    std::vector<IntMatrix> shear{IntMatrix{{1, 1}, {0, 1}}};
    CHECK_THROWS_AS(MatGroup::generate(shear, 50), OrderBoundExceeded);
    std::vector<IntMatrix> mixed{IntMatrix::identity(2), IntMatrix::identity(3)};
    CHECK_THROWS_AS(MatGroup::generate(mixed), InvalidInput);
}

TEST_CASE("generate is idempotent and elements are canonical")
{
    MatGroup s4 = symmetric4();
    MatGroup again = MatGroup::generate(s4.elements());
    CHECK(again == s4);
    for (std::size_t i = 1; i < s4.order(); ++i)
        CHECK(s4.element(i - 1) < s4.element(i));
    for (std::size_t i = 0; i < s4.order(); ++i)
        CHECK(s4.order() % s4.element_order(i) == 0);
}

TEST_CASE("subgroups")
{
    CHECK(subgroups(cyclic_group(minus_identity(2))).size() == 2);
    CHECK(subgroups(symmetric3()).size() == 6);
    CHECK(subgroups(cyclic_group(IntMatrix{{0, -1}, {1, 0}})).size() == 3);
    auto s4 = subgroups(symmetric4());
    CHECK(s4.size() == 30);
    for (const auto& h : s4)
        CHECK(24 % h.order() == 0);
    CHECK(s4.front().order() == 1);
    CHECK(s4.back().order() == 24);
    CHECK_THROWS_AS(subgroups(symmetric4(), 10), BoundExceeded);
}

TEST_CASE("conjugacy classes of subgroups of S4")
{
    MatGroup g = symmetric4();
    auto subs = subgroups(g);
    auto classes = conjugacy_classes(g, subs);
    CHECK(classes.size() == 11);
}

TEST_CASE("sylow")
{
    MatGroup s3 = symmetric3();
    CHECK(sylow(s3, 3).order() == 3);
    CHECK(sylow(s3, 2).order() == 2);
    CHECK(sylow(cyclic_group(minus_identity(3)), 5).order() == 1);
    CHECK(sylow(symmetric4(), 2).order() == 8);

    // number of Sylow subgroups is 1 mod p
    for (long p : {2L, 3L}) {
        MatGroup g = symmetric4();
        std::size_t q = p_part(g.order(), p), count = 0;
        for (const auto& h : subgroups(g))
            count += h.order() == q;
        CHECK(count % p == 1);
    }
}

TEST_CASE("subgroup_structure")
{
    MatGroup s3 = symmetric3();
    MatGroup p3 = sylow(s3, 3);
    auto st = subgroup_structure(s3, p3);
    CHECK(st.normalizer == s3);
    CHECK(st.centralizer == p3);
    CHECK(st.nc_index == 2);

    auto tr = subgroup_structure(s3, MatGroup::trivial(3));
    CHECK(tr.normalizer == s3);
    CHECK(tr.centralizer == s3);
    CHECK(tr.nc_index == 1);

    MatGroup inv = cyclic_group(minus_identity(2));
    auto ab = subgroup_structure(inv, inv);
    CHECK(ab.nc_index == 1);
    CHECK(ab.centralizer == inv);

    CHECK_THROWS_AS(subgroup_structure(inv, symmetric3()), InvalidInput);
}

TEST_CASE("op_core")
{
    MatGroup c6 = cyclic_group(IntMatrix{{0, -1}, {1, 1}});
    REQUIRE(c6.order() == 6);
    CHECK(op_core(c6, 2).order() == 3);
    CHECK(op_core(symmetric3(), 3) == symmetric3());
    CHECK(op_core(cyclic_group(IntMatrix{{0, -1}, {1, 0}}), 2).order() == 1);
    MatGroup s4 = symmetric4();
    MatGroup a4 = op_core(s4, 2);
    CHECK(a4.order() == 12);
    // normal in S4
    for (const auto& x : s4.elements())
        for (const auto& h : a4.generators())
            CHECK(a4.index_of(x * h * *unimodular_inverse(x)).has_value());
}

TEST_CASE("classify_element")
{
    auto t = classify_element(permutation({1, 0, 2}));
    CHECK(t.order == 2);
    CHECK(t.rank_drop == 1);
    CHECK(t.is_reflection);
    auto m2 = classify_element(minus_identity(2));
    CHECK(m2.rank_drop == 2);
    CHECK(m2.is_bireflection);
    CHECK_FALSE(m2.is_reflection);
    auto m3 = classify_element(minus_identity(3));
    CHECK(m3.rank_drop == 3);
    CHECK_FALSE(m3.is_bireflection);
    CHECK_THROWS_AS(classify_element(IntMatrix{{1, 1}, {0, 1}}, 100), OrderBoundExceeded);
    CHECK_THROWS_AS(classify_element(IntMatrix{{2, 0}, {0, 1}}), NonUnimodular);

    // rank drop agrees with the fixed lattice
    const MatGroup s4 = symmetric4();
    for (const auto& g : s4.elements()) {
        std::vector<IntMatrix> e{g};
        CHECK(classify_element(g).rank_drop == 4 - fixed_lattice(e).rank());
    }
}

TEST_CASE("is_fixed_point_free")
{
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(is_fixed_point_free(cyclic_group(minus_identity(n))));
    CHECK_FALSE(is_fixed_point_free(cyclic_group(g1())));
    CHECK(is_fixed_point_free(MatGroup::trivial(3)));
}

TEST_CASE("finite cyclic subgroups of GL2(Z) have order 1, 2, 3, 4 or 6")
{
    std::vector<IntMatrix> gens{IntMatrix{{0, -1}, {1, 1}}, IntMatrix{{0, 1}, {1, 0}}};
    MatGroup d12 = MatGroup::generate(gens);
    CHECK(d12.order() == 12);
    std::set<std::size_t> allowed{1, 2, 3, 4, 6};
    for (std::size_t i = 0; i < d12.order(); ++i)
        CHECK(allowed.count(d12.element_order(i)) == 1);
    std::vector<IntMatrix> gens8{IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{0, 1}, {1, 0}}};
    MatGroup d8 = MatGroup::generate(gens8);
    for (std::size_t i = 0; i < d8.order(); ++i)
        CHECK(allowed.count(d8.element_order(i)) == 1);
}

TEST_CASE("sylow beyond the subgroup enumeration bound")
{
    // signed permutations of Z^4, order 384
    IntMatrix neg = IntMatrix::identity(4);
    neg(0, 0) = -1;
    std::vector<IntMatrix> gens{permutation({1, 0, 2, 3}), permutation({1, 2, 3, 0}), neg};
    MatGroup b4 = MatGroup::generate(gens);
    REQUIRE(b4.order() == 384);
    MatGroup p2 = sylow(b4, 2);
    CHECK(p2.order() == 128);
    CHECK(b4.contains(p2));
    CHECK(sylow(b4, 3).order() == 3);
    CHECK(sylow(b4, 5).order() == 1);
}
