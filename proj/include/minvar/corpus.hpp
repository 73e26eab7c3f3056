#ifndef MINVAR_CORPUS_HPP
#define MINVAR_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "minvar/matgroup.hpp"

namespace minvar {

struct CorpusEntry {
    std::string name;
    std::string description;
    std::vector<IntMatrix> generators;
    std::vector<long> primes;  // primes the entry is exercised at

    MatGroup group() const { return MatGroup::generate(generators); }
};

/// Built-in example groups: the inversion family, G_1, G_2, Gamma, S_3, S_4,
/// the order-4 rotation and its rank-3 companion, and a few cyclic extras.
const std::vector<CorpusEntry>& builtin_corpus();
std::optional<CorpusEntry> find_builtin(const std::string& name);

}  // namespace minvar

#endif
