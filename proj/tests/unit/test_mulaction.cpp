#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "minvar/error.hpp"
#include "minvar/mulaction.hpp"

using namespace minvar;
using namespace minvar::test;

namespace {

IntVector vec(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("isotropy of the inversion group")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        MatGroup g = cyclic_group(minus_identity(n));
        auto rep = isotropy_subgroups(g);
        REQUIRE(rep.subgroups.size() == 2);
        CHECK(rep.subgroups[0].subgroup.order() == 1);
        IntVector e1(n, 0);
        e1[0] = 1;
        CHECK(rep.subgroups[0].witness == e1);
        CHECK(rep.subgroups[1].subgroup == g);
        CHECK(is_zero(rep.subgroups[1].witness));
    }
}

TEST_CASE("isotropy of the trivial group and of G_1")
{
    auto tr = isotropy_subgroups(MatGroup::trivial(3));
    REQUIRE(tr.subgroups.size() == 1);
    CHECK(is_zero(tr.subgroups[0].witness));

    MatGroup g = cyclic_group(g1());
    auto rep = isotropy_subgroups(g);
    REQUIRE(rep.subgroups.size() == 2);
    CHECK(rep.subgroups[0].witness == vec({1, 0, 0}));
    CHECK(rep.subgroups[1].subgroup == g);
}

TEST_CASE("isotropy of S3 permuting coordinates")
{
    MatGroup s3 = symmetric3();
    auto rep = isotropy_subgroups(s3);
    REQUIRE(rep.subgroups.size() == 3);
    CHECK(rep.subgroups[0].subgroup.order() == 1);
    CHECK(rep.subgroups[1].subgroup.order() == 2);
    CHECK(rep.subgroups[1].class_size == 3);
    CHECK(rep.subgroups[2].subgroup.order() == 6);
    for (const auto& e : rep.subgroups)
        CHECK(stabilizer(s3, e.witness) == e.subgroup);
}

TEST_CASE("isotropy witnesses: every stabilizer of a small point is listed up to conjugacy")
{
    std::vector<IntMatrix> gens{permutation({1, 0, 2, 3}), permutation({1, 2, 3, 0})};
    MatGroup s4 = MatGroup::generate(gens);
    auto rep = isotropy_subgroups(s4);
    auto subs = subgroups(s4);
    auto classes = conjugacy_classes(s4, subs);
    auto class_of = [&](const MatGroup& h) {
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto k : classes[c])
                if (subs[k] == h)
                    return c;
        return classes.size();
    };
    std::set<std::size_t> listed;
    for (const auto& e : rep.subgroups)
        listed.insert(class_of(e.subgroup));
    std::set<std::size_t> seen;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                for (long d = -2; d <= 2; ++d)
                    seen.insert(class_of(stabilizer(s4, vec({a, b, c, d}))));
    CHECK(seen == listed);
}

TEST_CASE("mu_action")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto m = mu_action(cyclic_group(minus_identity(n)), 2);
        REQUIRE(m.value);
        CHECK(*m.value == 1);
        CHECK(m.exact);
    }
    auto s = mu_action(symmetric3(), 3);
    REQUIRE(s.value);
    CHECK(*s.value == 3);
    CHECK(mu_action(MatGroup::trivial(2), 2).infinite());
    CHECK(mu_action(cyclic_group(minus_identity(2)), 3).infinite());
}

TEST_CASE("height_ir")
{
    CHECK(height_ir(MatGroup::trivial(3)) == 0);
    CHECK(height_ir(cyclic_group(minus_identity(3))) == 3);
    CHECK(height_ir(symmetric3()) == 2);
    CHECK(height_ir(cyclic_group(g1())) == 2);
}

TEST_CASE("trace_ideal_height")
{
    SubgroupPredicate trivial_only = [](const MatGroup& h) { return h.order() == 1; };
    CHECK(trace_ideal_height(cyclic_group(minus_identity(3)), 2, trivial_only) == 3);
    CHECK_FALSE(trace_ideal_height(MatGroup::trivial(3), 2, trivial_only).has_value());
    CHECK(trace_ideal_height(symmetric3(), 3, trivial_only) == 2);
    CHECK(trace_ideal_height(symmetric3(), 2, trivial_only) == 1);

    SubgroupPredicate not_subgroup_closed = [](const MatGroup& h) { return h.order() == 6; };
    CHECK_THROWS_AS(trace_ideal_height(symmetric3(), 3, not_subgroup_closed), InvalidInput);
    // a single transposition is not a conjugation-closed choice
    const MatGroup s3 = symmetric3();
    const IntMatrix t = permutation({1, 0, 2});
    SubgroupPredicate one_transposition = [&](const MatGroup& h) {
        return h.order() == 1 || (h.order() == 2 && h.index_of(t).has_value());
    };
    CHECK_THROWS_AS(trace_ideal_height(s3, 2, one_transposition), InvalidInput);
}
