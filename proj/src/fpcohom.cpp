#include "minvar/fpcohom.hpp"

#include <algorithm>

#include "minvar/error.hpp"

namespace minvar {

namespace {

// h . v for v in a free module of rank v.size() / order
fp::Vec act(const CayleyTable& g, std::size_t h, const fp::Vec& v)
{
    const std::size_t m = g.order;
    fp::Vec out(v.size(), 0);
    for (std::size_t c = 0; c < v.size() / m; ++c)
        for (std::size_t k = 0; k < m; ++k)
            out[c * m + g.product(h, k)] = v[c * m + k];
    return out;
}

fp::Elem augmentation(const fp::Field& f, const fp::Vec& v, std::size_t component, std::size_t m)
{
    fp::Elem s = 0;
    for (std::size_t k = 0; k < m; ++k)
        s = f.add(s, v[component * m + k]);
    return s;
}

// Builds the resolution one degree at a time, keeping the current kernel.
class Resolver {
public:
    Resolver(const CayleyTable& g, std::uint32_t p, const CohomologyOptions& opts)
        : g_(g), f_(p), opts_(opts)
    {
        if (g.order > opts.max_group_order)
            throw BoundExceeded("cohomology: |G| = " + std::to_string(g.order) + " exceeds bound " +
                                std::to_string(opts.max_group_order));
        res_.p = p;
        res_.group_order = g.order;
        res_.ranks = {1};
        res_.boundaries = {{}};
        const std::size_t m = g.order;
        for (std::size_t h = 0; h < m; ++h) {
            if (h == g.identity)
                continue;
            fp::Vec v(m, 0);
            v[h] = 1;
            v[g.identity] = f_.neg(1);
            kernel_.push_back(std::move(v));
        }
    }

    const FpResolution& result() const { return res_; }

    void extend()
    {
        const std::size_t m = g_.order;
        const std::size_t len = m * res_.ranks.back();
        std::vector<fp::Vec> gens = choose_generators(len);

        const std::size_t r = res_.ranks.size();
        res_.ranks.push_back(gens.size());
        res_.boundaries.push_back(gens);
        for (const auto& w : gens)
            for (std::size_t c = 0; c < len / m; ++c)
                if (augmentation(f_, w, c, m) != 0)
                    res_.minimal = false;

        fp::Matrix d = boundary_matrix(g_, res_, r);
        kernel_ = fp::nullspace(f_, std::move(d), opts_.reversed_pivots);
    }

private:
    // Generators of the current kernel K as a submodule: first a basis of
    // K modulo I K (I the augmentation ideal), which suffices for p-groups,
    // then whatever else is needed to generate K.
    std::vector<fp::Vec> choose_generators(std::size_t len)
    {
        std::vector<fp::Vec> chosen;
        if (kernel_.empty())
            return chosen;
        fp::Subspace w(f_, len);
        for (auto s : g_.generators)
            for (const auto& k : kernel_) {
                fp::Vec d = act(g_, s, k);
                for (std::size_t i = 0; i < len; ++i)
                    d[i] = f_.sub(d[i], k[i]);
                w.insert(std::move(d));
            }
        for (const auto& k : kernel_)
            if (w.insert(k))
                chosen.push_back(k);

        fp::Subspace module(f_, len);
        auto add_orbit = [&](const fp::Vec& v) {
            for (std::size_t h = 0; h < g_.order; ++h)
                module.insert(act(g_, h, v));
        };
        for (const auto& v : chosen)
            add_orbit(v);
        for (const auto& k : kernel_) {
            if (module.dim() == kernel_.size())
                break;
            if (!module.contains(k)) {
                chosen.push_back(k);
                add_orbit(k);
            }
        }
        return chosen;
    }

    const CayleyTable& g_;
    fp::Field f_;
    CohomologyOptions opts_;
    FpResolution res_;
    std::vector<fp::Vec> kernel_;
};

// Rank of the coboundary Hom(F_{r-1}, F_p) -> Hom(F_r, F_p).
std::size_t coboundary_rank(const fp::Field& f, const FpResolution& res, std::size_t r)
{
    const std::size_t m = res.group_order;
    fp::Matrix d(res.ranks[r], res.ranks[r - 1]);
    for (std::size_t i = 0; i < res.ranks[r]; ++i)
        for (std::size_t j = 0; j < res.ranks[r - 1]; ++j)
            d(i, j) = augmentation(f, res.boundaries[r][i], j, m);
    return fp::rank(f, std::move(d));
}

std::size_t dim_at(const fp::Field& f, const FpResolution& res, std::size_t r)
{
    std::size_t rk = coboundary_rank(f, res, r + 1);
    if (r > 0)
        rk += coboundary_rank(f, res, r);
    return res.ranks[r] - rk;
}

}  // namespace

fp::Matrix boundary_matrix(const CayleyTable& g, const FpResolution& res, std::size_t r)
{
    const std::size_t m = g.order;
    const std::size_t rows = m * res.ranks[r - 1];
    fp::Matrix d(rows, m * res.ranks[r]);
    for (std::size_t i = 0; i < res.ranks[r]; ++i)
        for (std::size_t h = 0; h < m; ++h) {
            fp::Vec col = act(g, h, res.boundaries[r][i]);
            for (std::size_t row = 0; row < rows; ++row)
                d(row, i * m + h) = col[row];
        }
    return d;
}

FpResolution resolution(const CayleyTable& g, std::uint32_t p, std::size_t depth, const CohomologyOptions& opts)
{
    if (depth > opts.max_depth + 1)
        throw BoundExceeded("resolution depth " + std::to_string(depth) + " exceeds bound");
    Resolver r(g, p, opts);
    for (std::size_t k = 0; k < depth; ++k)
        r.extend();
    return r.result();
}

FpResolution resolution(const MatGroup& g, std::uint32_t p, std::size_t depth, const CohomologyOptions& opts)
{
    return resolution(g.cayley_table(), p, depth, opts);
}

bool boundaries_in_augmentation_ideal(const FpResolution& res)
{
    const fp::Field f(res.p);
    for (std::size_t r = 1; r < res.ranks.size(); ++r)
        for (const auto& w : res.boundaries[r])
            for (std::size_t c = 0; c < res.ranks[r - 1]; ++c)
                if (augmentation(f, w, c, res.group_order) != 0)
                    return false;
    return true;
}

std::vector<std::size_t> cohomology_dims(const FpResolution& res)
{
    const fp::Field f(res.p);
    std::vector<std::size_t> dims;
    for (std::size_t r = 0; r < res.depth(); ++r)
        dims.push_back(dim_at(f, res, r));
    return dims;
}

std::vector<std::size_t> cohomology_table(const CayleyTable& g, std::uint32_t p, std::size_t max_degree,
                                          const CohomologyOptions& opts)
{
    if (max_degree > opts.max_depth)
        throw BoundExceeded("cohomology degree " + std::to_string(max_degree) + " exceeds depth bound " +
                            std::to_string(opts.max_depth));
    return cohomology_dims(resolution(g, p, max_degree + 1, opts));
}

std::size_t h_dim(const CayleyTable& g, std::uint32_t p, std::size_t r, const CohomologyOptions& opts)
{
    return cohomology_table(g, p, r, opts).back();
}

std::size_t h_dim(const MatGroup& g, std::uint32_t p, std::size_t r, const CohomologyOptions& opts)
{
    return h_dim(g.cayley_table(), p, r, opts);
}

MuValue mu_p(const CayleyTable& g, std::uint32_t p, std::size_t search_limit, const CohomologyOptions& opts)
{
    require_prime(p);
    if (g.order % p != 0)
        return {std::nullopt, true};
    if (search_limit > opts.max_depth)
        throw BoundExceeded("mu_p search limit exceeds depth bound");
    const fp::Field f(p);
    Resolver r(g, p, opts);
    r.extend();
    for (std::size_t deg = 1; deg <= search_limit; ++deg) {
        r.extend();
        if (dim_at(f, r.result(), deg) != 0)
            return {deg, true};
    }
    return {search_limit + 1, false};
}

MuValue mu_p(const MatGroup& g, std::uint32_t p, std::size_t search_limit, const CohomologyOptions& opts)
{
    require_prime(p);
    if (g.order() % p != 0)
        return {std::nullopt, true};
    return mu_p(g.cayley_table(), p, search_limit, opts);
}

std::size_t mu_p_formula(const MatGroup& g, long p)
{
    MatGroup P = sylow(g, p);
    if (P.order() != static_cast<std::size_t>(p))
        throw InvalidInput("mu_p_formula requires a Sylow subgroup of order p; |P| = " + std::to_string(P.order()));
    return 2 * subgroup_structure(g, P).nc_index - 1;
}

}  // namespace minvar
