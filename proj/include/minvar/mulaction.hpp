#ifndef MINVAR_MULACTION_HPP
#define MINVAR_MULACTION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "minvar/exactlat.hpp"
#include "minvar/fpcohom.hpp"
#include "minvar/matgroup.hpp"

namespace minvar {

struct IsotropyEntry {
    MatGroup subgroup;        // representative of its conjugacy class
    IntVector witness;        // a lattice point whose stabilizer is exactly subgroup
    std::size_t class_size = 1;
};

/// Realizable isotropy groups G_a, one entry per conjugacy class, in
/// canonical subgroup order.
struct IsotropyReport {
    std::vector<IsotropyEntry> subgroups;
    bool complete = true;
};

/// Stabilizer of a lattice point.
MatGroup stabilizer(const MatGroup& g, const IntVector& a);

IsotropyReport isotropy_subgroups(const MatGroup& g, std::size_t subgroup_bound = kDefaultSubgroupBound);

/// Minimum of mu_p(G_a) over lattice points a.
MuValue mu_action(const MatGroup& g, std::uint32_t p, std::size_t search_limit = 10,
                  const CohomologyOptions& opts = {});
MuValue mu_action(const IsotropyReport& iso, std::uint32_t p, std::size_t search_limit = 10,
                  const CohomologyOptions& opts = {});

/// Height of the ideal of R generated by (h - 1)R: n - rank A^H.
std::size_t height_ir(const MatGroup& h);
std::size_t height_ir(std::span<const IntMatrix> elems);

using SubgroupPredicate = std::function<bool(const MatGroup&)>;

/// Infimum of height_ir(P) over p-subgroups P of G not satisfying x; nullopt
/// for an empty infimum. Throws InvalidInput unless x is closed under
/// conjugation and under taking subgroups.
std::optional<std::size_t> trace_ideal_height(const MatGroup& g, long p, const SubgroupPredicate& x);

}  // namespace minvar

#endif
