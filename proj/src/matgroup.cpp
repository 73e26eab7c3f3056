#include "minvar/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "minvar/error.hpp"

namespace minvar {

namespace {
constexpr std::size_t kTableLimit = 256;
}

CayleyTable CayleyTable::cyclic(std::size_t m)
{
    if (m == 0)
        throw InvalidInput("cyclic group of order 0");
    CayleyTable t;
    t.order = m;
    t.identity = 0;
    t.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            t.mul[i * m + j] = (i + j) % m;
    if (m > 1)
        t.generators = {1};
    return t;
}

// ---------------------------------------------------------------- MatGroup

MatGroup::MatGroup(std::size_t n, std::vector<IntMatrix> sorted_elements)
    : n_(n), elements_(std::move(sorted_elements))
{
    const IntMatrix I = IntMatrix::identity(n_);
    identity_ = *index_of(I);
    const std::size_t m = order();
    inverse_.assign(m, 0);
    if (m <= kTableLimit) {
        table_.resize(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                auto k = index_of(elements_[i] * elements_[j]);
                if (!k)
                    throw std::logic_error("element set is not closed under multiplication");
                table_[i * m + j] = *k;
                if (*k == identity_)
                    inverse_[i] = j;
            }
    } else {
        for (std::size_t i = 0; i < m; ++i)
            inverse_[i] = *index_of(*unimodular_inverse(elements_[i]));
    }
}

MatGroup MatGroup::generate(std::span<const IntMatrix> gens, std::size_t max_order)
{
    if (gens.empty())
        throw InvalidInput("generate: no generators (use MatGroup::trivial)");
    const std::size_t n = gens[0].rows();
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != n)
            throw InvalidInput("generators must be square matrices of equal size");
        if (!g.is_unimodular())
            throw NonUnimodular("generator is not unimodular: " + g.to_string());
    }
    std::set<IntMatrix> seen{IntMatrix::identity(n)};
    std::deque<IntMatrix> frontier{IntMatrix::identity(n)};
    while (!frontier.empty()) {
        IntMatrix x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            IntMatrix y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > max_order)
                    throw OrderBoundExceeded("group closure exceeds order bound " + std::to_string(max_order));
                frontier.push_back(std::move(y));
            }
        }
    }
    MatGroup G(n, std::vector<IntMatrix>(seen.begin(), seen.end()));
    std::vector<std::size_t> idx;
    for (const auto& g : gens) {
        std::size_t k = *G.index_of(g);
        if (k != G.identity_ && std::find(idx.begin(), idx.end(), k) == idx.end())
            idx.push_back(k);
    }
    G.generators_ = std::move(idx);
    return G;
}

MatGroup MatGroup::trivial(std::size_t n)
{
    return MatGroup(n, {IntMatrix::identity(n)});
}

std::vector<IntMatrix> MatGroup::generators() const
{
    if (generators_.empty())
        return {IntMatrix::identity(n_)};
    std::vector<IntMatrix> g;
    for (auto i : generators_)
        g.push_back(elements_[i]);
    return g;
}

std::optional<std::size_t> MatGroup::index_of(const IntMatrix& g) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g))
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t MatGroup::mul(std::size_t i, std::size_t j) const
{
    if (!table_.empty())
        return table_[i * order() + j];
    return *index_of(elements_[i] * elements_[j]);
}

std::size_t MatGroup::element_order(std::size_t i) const
{
    std::size_t k = 1, x = i;
    while (x != identity_) {
        x = mul(x, i);
        ++k;
    }
    return k;
}

CayleyTable MatGroup::cayley_table() const
{
    const std::size_t m = order();
    CayleyTable t;
    t.order = m;
    t.identity = identity_;
    t.generators = generators_;
    t.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            t.mul[i * m + j] = mul(i, j);
    return t;
}

bool MatGroup::contains(const MatGroup& h) const
{
    if (h.n_ != n_)
        return false;
    return std::all_of(h.elements_.begin(), h.elements_.end(),
                       [&](const IntMatrix& x) { return index_of(x).has_value(); });
}

bool MatGroup::is_cyclic() const
{
    for (std::size_t i = 0; i < order(); ++i)
        if (element_order(i) == order())
            return true;
    return false;
}

std::vector<std::size_t> MatGroup::closure(const std::vector<std::size_t>& gens) const
{
    std::vector<bool> in(order(), false);
    std::vector<std::size_t> out{identity_};
    in[identity_] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (auto g : gens) {
            std::size_t y = mul(out[k], g);
            if (!in[y]) {
                in[y] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

void MatGroup::pick_generators()
{
    generators_.clear();
    std::vector<std::size_t> span{identity_};
    for (std::size_t i = 0; i < order(); ++i) {
        if (std::binary_search(span.begin(), span.end(), i))
            continue;
        generators_.push_back(i);
        span = closure(generators_);
        if (span.size() == order())
            break;
    }
}

MatGroup MatGroup::subgroup(const std::vector<std::size_t>& indices) const
{
    std::vector<IntMatrix> elems;
    elems.reserve(indices.size());
    for (auto i : indices)
        elems.push_back(elements_[i]);
    MatGroup H(n_, std::move(elems));
    H.pick_generators();
    return H;
}

std::vector<std::size_t> MatGroup::indices_of(const MatGroup& h) const
{
    std::vector<std::size_t> idx;
    idx.reserve(h.order());
    for (const auto& x : h.elements_) {
        auto k = index_of(x);
        if (!k)
            throw InvalidInput("not a subgroup of the given group");
        idx.push_back(*k);
    }
    return idx;  // sorted: both element lists share the canonical order
}

// ---------------------------------------------------------------- subgroup lattice

namespace {

using IndexSet = std::vector<std::size_t>;

bool canonical_less(const IndexSet& a, const IndexSet& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::vector<IndexSet> subgroup_index_sets(const MatGroup& g)
{
    std::set<IndexSet> cyclic;
    for (std::size_t i = 0; i < g.order(); ++i)
        cyclic.insert(g.closure({i}));

    // every subgroup is a join of cyclic subgroups
    std::set<IndexSet> all(cyclic.begin(), cyclic.end());
    std::deque<IndexSet> work(cyclic.begin(), cyclic.end());
    while (!work.empty()) {
        IndexSet h = std::move(work.front());
        work.pop_front();
        for (const auto& c : cyclic) {
            if (std::includes(h.begin(), h.end(), c.begin(), c.end()))
                continue;
            IndexSet gens = h;
            gens.insert(gens.end(), c.begin(), c.end());
            IndexSet j = g.closure(gens);
            if (all.insert(j).second)
                work.push_back(std::move(j));
        }
    }
    std::vector<IndexSet> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

IndexSet conjugate(const MatGroup& g, const IndexSet& h, std::size_t x)
{
    IndexSet c;
    c.reserve(h.size());
    const std::size_t xi = g.inverse(x);
    for (auto k : h)
        c.push_back(g.mul(g.mul(x, k), xi));
    std::sort(c.begin(), c.end());
    return c;
}

}  // namespace

std::vector<MatGroup> subgroups(const MatGroup& g, std::size_t bound)
{
    if (g.order() > bound)
        throw BoundExceeded("subgroup enumeration: |G| = " + std::to_string(g.order()) + " exceeds bound " +
                            std::to_string(bound));
    std::vector<MatGroup> out;
    for (const auto& s : subgroup_index_sets(g))
        out.push_back(g.subgroup(s));
    return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const MatGroup& g, const std::vector<MatGroup>& subs)
{
    std::map<IndexSet, std::size_t> position;
    std::vector<IndexSet> sets;
    for (std::size_t k = 0; k < subs.size(); ++k) {
        sets.push_back(g.indices_of(subs[k]));
        position[sets.back()] = k;
    }
    std::vector<int> cls(subs.size(), -1);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < subs.size(); ++k) {
        if (cls[k] >= 0)
            continue;
        std::set<std::size_t> members;
        for (std::size_t x = 0; x < g.order(); ++x) {
            auto it = position.find(conjugate(g, sets[k], x));
            if (it == position.end())
                throw InvalidInput("conjugacy_classes: subgroup list is not conjugation-closed");
            members.insert(it->second);
        }
        for (auto m : members)
            cls[m] = static_cast<int>(classes.size());
        classes.emplace_back(members.begin(), members.end());
    }
    return classes;
}

bool is_p_power(std::size_t m, long p)
{
    while (m % p == 0)
        m /= p;
    return m == 1;
}

std::size_t p_part(std::size_t m, long p)
{
    std::size_t q = 1;
    while (m % p == 0) {
        m /= p;
        q *= p;
    }
    return q;
}

MatGroup sylow(const MatGroup& g, long p)
{
    require_prime(p);
    const std::size_t q = p_part(g.order(), p);
    if (q == 1)
        return MatGroup::trivial(g.n());
    if (g.order() <= kDefaultSubgroupBound) {
        for (const auto& s : subgroup_index_sets(g))
            if (s.size() == q)
                return g.subgroup(s);
        throw std::logic_error("no Sylow subgroup found");
    }
    // Large groups: grow a p-subgroup through p-elements of its normalizer.
    IndexSet P{g.identity_index()};
    while (P.size() < q) {
        bool grown = false;
        for (std::size_t x = 0; x < g.order() && !grown; ++x) {
            if (std::binary_search(P.begin(), P.end(), x) || !is_p_power(g.element_order(x), p))
                continue;
            if (conjugate(g, P, x) != P)
                continue;
            IndexSet gens = P;
            gens.push_back(x);
            P = g.closure(gens);
            grown = true;
        }
        if (!grown)
            throw std::logic_error("Sylow growth stalled");
    }
    return g.subgroup(P);
}

SubgroupStructure subgroup_structure(const MatGroup& g, const MatGroup& h)
{
    const IndexSet hs = g.indices_of(h);
    IndexSet hgens;
    for (auto i : h.generator_indices())
        hgens.push_back(*g.index_of(h.element(i)));

    IndexSet normalizer, centralizer;
    for (std::size_t x = 0; x < g.order(); ++x) {
        const std::size_t xi = g.inverse(x);
        bool normalizes = true, centralizes = true;
        for (auto k : hgens) {
            std::size_t c = g.mul(g.mul(x, k), xi);
            if (c != k)
                centralizes = false;
            if (!std::binary_search(hs.begin(), hs.end(), c)) {
                normalizes = false;
                break;
            }
        }
        if (normalizes)
            normalizer.push_back(x);
        if (normalizes && centralizes)
            centralizer.push_back(x);
    }
    SubgroupStructure s{g.subgroup(normalizer), g.subgroup(centralizer), normalizer.size() / centralizer.size()};
    return s;
}

MatGroup op_core(const MatGroup& g, long p)
{
    require_prime(p);
    IndexSet gens;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (g.element_order(x) % p != 0)
            gens.push_back(x);
    IndexSet core = g.closure(gens);
    if (!is_p_power(g.order() / core.size(), p))
        throw std::logic_error("O^p(G) index is not a power of p");
    return g.subgroup(core);
}

ElementProfile classify_element(const IntMatrix& g, std::size_t order_bound)
{
    if (!g.is_square())
        throw InvalidInput("classify_element: matrix not square");
    if (!g.is_unimodular())
        throw NonUnimodular("classify_element: matrix not unimodular");
    const IntMatrix I = IntMatrix::identity(g.rows());
    ElementProfile e;
    IntMatrix x = g;
    while (!(x == I)) {
        if (++e.order > order_bound)
            throw OrderBoundExceeded("element order exceeds bound " + std::to_string(order_bound));
        x = x * g;
    }
    e.rank_drop = rank(g - I);
    e.is_reflection = e.rank_drop <= 1;
    e.is_bireflection = e.rank_drop <= 2;
    return e;
}

bool is_fixed_point_free(const MatGroup& h)
{
    const IntMatrix I = IntMatrix::identity(h.n());
    for (std::size_t i = 0; i < h.order(); ++i)
        if (i != h.identity_index() && rank(h.element(i) - I) != h.n())
            return false;
    return true;
}

}  // namespace minvar
