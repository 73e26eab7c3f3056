#ifndef MINVAR_MATGROUP_HPP
#define MINVAR_MATGROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "minvar/exactlat.hpp"

namespace minvar {

inline constexpr std::size_t kDefaultMaxOrder = 10000;
inline constexpr std::size_t kDefaultSubgroupBound = 200;

/// Abstract finite group given by its multiplication table. Elements are
/// 0..order-1; mul[i * order + j] is the index of g_i g_j.
struct CayleyTable {
    std::size_t order = 0;
    std::size_t identity = 0;
    std::vector<std::size_t> mul;
    std::vector<std::size_t> generators;

    std::size_t product(std::size_t i, std::size_t j) const { return mul[i * order + j]; }

    static CayleyTable cyclic(std::size_t m);
};

/// A finite subgroup of GL_n(Z), materialized as its sorted element list.
class MatGroup {
public:
    MatGroup() = default;

    /// Closure of gens under multiplication. Throws NonUnimodular or
    /// OrderBoundExceeded.
    static MatGroup generate(std::span<const IntMatrix> gens, std::size_t max_order = kDefaultMaxOrder);
    static MatGroup trivial(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<IntMatrix>& elements() const { return elements_; }
    const IntMatrix& element(std::size_t i) const { return elements_[i]; }
    const std::vector<std::size_t>& generator_indices() const { return generators_; }
    /// Generating matrices; {identity} for the trivial group.
    std::vector<IntMatrix> generators() const;

    std::optional<std::size_t> index_of(const IntMatrix& g) const;
    std::size_t identity_index() const { return identity_; }
    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }
    std::size_t element_order(std::size_t i) const;

    bool has_table() const { return !table_.empty(); }
    CayleyTable cayley_table() const;

    bool contains(const MatGroup& h) const;
    bool is_cyclic() const;

    /// Subgroup with the given (sorted, closed) element indices.
    MatGroup subgroup(const std::vector<std::size_t>& indices) const;
    /// Element indices of h inside this group; throws if h is not a subset.
    std::vector<std::size_t> indices_of(const MatGroup& h) const;
    /// Closure of a set of element indices, as sorted indices.
    std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;

    bool operator==(const MatGroup& o) const { return n_ == o.n_ && elements_ == o.elements_; }

private:
    MatGroup(std::size_t n, std::vector<IntMatrix> sorted_elements);
    void pick_generators();

    std::size_t n_ = 0;
    std::vector<IntMatrix> elements_;
    std::vector<std::size_t> generators_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> table_;  // empty when order exceeds kTableLimit
};

/// All subgroups of G in canonical order: by order, then by element indices.
std::vector<MatGroup> subgroups(const MatGroup& g, std::size_t bound = kDefaultSubgroupBound);

/// Partition of subgroups (as returned by subgroups()) into G-conjugacy classes,
/// each class listed as positions into that vector, representatives first.
std::vector<std::vector<std::size_t>> conjugacy_classes(const MatGroup& g, const std::vector<MatGroup>& subs);

/// A Sylow p-subgroup: the first of full p-part order in canonical subgroup order.
MatGroup sylow(const MatGroup& g, long p);

struct SubgroupStructure {
    MatGroup normalizer;
    MatGroup centralizer;
    std::size_t nc_index = 1;
};

SubgroupStructure subgroup_structure(const MatGroup& g, const MatGroup& h);

/// O^p(G): generated by the elements of order prime to p.
MatGroup op_core(const MatGroup& g, long p);

struct ElementProfile {
    std::size_t order = 1;
    std::size_t rank_drop = 0;  // rank(g - I)
    bool is_reflection = true;
    bool is_bireflection = true;
};

ElementProfile classify_element(const IntMatrix& g, std::size_t order_bound = kDefaultMaxOrder);

/// True iff no non-identity element has eigenvalue 1.
bool is_fixed_point_free(const MatGroup& h);

bool is_p_power(std::size_t m, long p);
/// Largest power of p dividing m.
std::size_t p_part(std::size_t m, long p);

}  // namespace minvar

#endif
