#ifndef MINVAR_FPCOHOM_HPP
#define MINVAR_FPCOHOM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "minvar/fp.hpp"
#include "minvar/matgroup.hpp"

namespace minvar {

struct CohomologyOptions {
    std::size_t max_group_order = 48;
    std::size_t max_depth = 10;
    // Eliminate kernel columns in reverse order. The resulting dimensions
    // must not change; exposed for testing that.
    bool reversed_pivots = false;
};

/// Truncated free resolution F_d -> ... -> F_0 -> F_p over F_p[G].
///
/// F_r is free of rank ranks[r]; a module element is a vector of length
/// group_order * ranks[r], component-major, each component indexed by group
/// element. boundaries[r][i] is the image in F_{r-1} of the i-th free
/// generator of F_r (boundaries[0] is empty; F_0 maps to F_p by augmentation).
///
/// For p-groups the resolution is minimal: every boundary component lies in
/// the augmentation ideal and ranks[r] = dim H^r(G, F_p). Other groups admit
/// no minimal free resolution; their cohomology is read from the Hom complex.
struct FpResolution {
    std::uint32_t p = 2;
    std::size_t group_order = 1;
    std::vector<std::size_t> ranks;
    std::vector<std::vector<fp::Vec>> boundaries;
    bool minimal = true;

    std::size_t depth() const { return ranks.size() - 1; }
};

FpResolution resolution(const CayleyTable& g, std::uint32_t p, std::size_t depth,
                        const CohomologyOptions& opts = {});
FpResolution resolution(const MatGroup& g, std::uint32_t p, std::size_t depth,
                        const CohomologyOptions& opts = {});

/// Matrix over F_p of the F_p-linear map F_r -> F_{r-1} (r >= 1).
fp::Matrix boundary_matrix(const CayleyTable& g, const FpResolution& res, std::size_t r);

/// True iff every boundary component has augmentation zero.
bool boundaries_in_augmentation_ideal(const FpResolution& res);

/// dim H^r(G, F_p) for r = 0 .. res.depth() - 1, from the Hom complex.
std::vector<std::size_t> cohomology_dims(const FpResolution& res);

/// dim H^r(G, F_p) for r = 0 .. max_degree.
std::vector<std::size_t> cohomology_table(const CayleyTable& g, std::uint32_t p, std::size_t max_degree,
                                          const CohomologyOptions& opts = {});

std::size_t h_dim(const CayleyTable& g, std::uint32_t p, std::size_t r, const CohomologyOptions& opts = {});
std::size_t h_dim(const MatGroup& g, std::uint32_t p, std::size_t r, const CohomologyOptions& opts = {});

/// First positive degree with nonvanishing cohomology. value == nullopt means
/// infinity. When inexact, value is search_limit + 1 and only a lower bound.
struct MuValue {
    std::optional<std::size_t> value;
    bool exact = true;

    bool infinite() const { return !value.has_value(); }
    bool operator==(const MuValue&) const = default;
};

MuValue mu_p(const CayleyTable& g, std::uint32_t p, std::size_t search_limit = 10,
             const CohomologyOptions& opts = {});
MuValue mu_p(const MatGroup& g, std::uint32_t p, std::size_t search_limit = 10,
             const CohomologyOptions& opts = {});

/// 2 [N_G(P) : C_G(P)] - 1; requires |P| = p.
std::size_t mu_p_formula(const MatGroup& g, long p);

}  // namespace minvar

#endif
