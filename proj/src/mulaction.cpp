#include "minvar/mulaction.hpp"

#include <algorithm>
#include <stdexcept>

#include "minvar/error.hpp"

namespace minvar {

MatGroup stabilizer(const MatGroup& g, const IntVector& a)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.element(i).apply(a) == a)
            idx.push_back(i);
    return g.subgroup(idx);
}

IsotropyReport isotropy_subgroups(const MatGroup& g, std::size_t subgroup_bound)
{
    const std::vector<MatGroup> subs = subgroups(g, subgroup_bound);
    const auto classes = conjugacy_classes(g, subs);

    IsotropyReport report;
    for (const auto& cls : classes) {
        const MatGroup& h = subs[cls.front()];
        std::vector<IntMatrix> hgens = h.generators();
        const Sublattice fixed = fixed_lattice(hgens);

        // a in A^H has stabilizer exactly H iff a avoids A^<H, g> for all g outside H
        std::vector<Sublattice> parts;
        bool realizable = true;
        for (std::size_t i = 0; i < g.order() && realizable; ++i) {
            if (h.index_of(g.element(i)))
                continue;
            std::vector<IntMatrix> gens = hgens;
            gens.push_back(g.element(i));
            Sublattice part = fixed_lattice(gens);
            if (part == fixed)
                realizable = false;
            else if (std::find(parts.begin(), parts.end(), part) == parts.end())
                parts.push_back(std::move(part));
        }
        if (!realizable)
            continue;
        CoverResult c = covers(fixed, parts);
        if (c.covered)
            continue;
        if (!(stabilizer(g, *c.witness) == h))
            throw std::logic_error("isotropy witness has the wrong stabilizer");
        report.subgroups.push_back({h, *c.witness, cls.size()});
    }
    return report;
}

MuValue mu_action(const IsotropyReport& iso, std::uint32_t p, std::size_t search_limit,
                  const CohomologyOptions& opts)
{
    require_prime(p);
    MuValue best{std::nullopt, true};
    for (const auto& e : iso.subgroups) {
        if (e.subgroup.order() % p != 0)
            continue;
        MuValue m = mu_p(e.subgroup, p, search_limit, opts);
        if (m.infinite())
            continue;
        if (best.infinite() || *m.value < *best.value || (*m.value == *best.value && m.exact))
            best = m;
    }
    if (!iso.complete && best.exact)
        best.exact = false;
    return best;
}

MuValue mu_action(const MatGroup& g, std::uint32_t p, std::size_t search_limit, const CohomologyOptions& opts)
{
    require_prime(p);
    if (g.order() % p != 0)
        return {std::nullopt, true};
    return mu_action(isotropy_subgroups(g), p, search_limit, opts);
}

std::size_t height_ir(std::span<const IntMatrix> elems)
{
    return elems.front().rows() - fixed_lattice(elems).rank();
}

std::size_t height_ir(const MatGroup& h)
{
    return height_ir(h.generators());
}

std::optional<std::size_t> trace_ideal_height(const MatGroup& g, long p, const SubgroupPredicate& x)
{
    require_prime(p);
    const std::vector<MatGroup> subs = subgroups(g);
    std::vector<bool> in_x;
    for (const auto& h : subs)
        in_x.push_back(x(h));

    for (const auto& cls : conjugacy_classes(g, subs))
        for (auto k : cls)
            if (in_x[k] != in_x[cls.front()])
                throw InvalidInput("subgroup collection is not closed under conjugation");
    for (std::size_t a = 0; a < subs.size(); ++a) {
        if (!in_x[a])
            continue;
        for (std::size_t b = 0; b < subs.size(); ++b)
            if (!in_x[b] && subs[b].order() < subs[a].order() && subs[a].contains(subs[b]))
                throw InvalidInput("subgroup collection is not closed under taking subgroups");
    }

    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < subs.size(); ++k) {
        if (in_x[k] || !is_p_power(subs[k].order(), p))
            continue;
        std::size_t h = height_ir(subs[k]);
        if (!best || h < *best)
            best = h;
    }
    return best;
}

}  // namespace minvar
