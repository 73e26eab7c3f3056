#ifndef MINVAR_CMCLASSIFY_HPP
#define MINVAR_CMCLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "minvar/fpcohom.hpp"
#include "minvar/jsonio.hpp"
#include "minvar/matgroup.hpp"

namespace minvar {

enum class Status { CM, NotCM, Unknown };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Result of evaluating one rule on its own.
struct RuleOutcome {
    std::string rule;
    bool applicable = false;
    Status status = Status::Unknown;  // meaningful when applicable
    std::string reason;
};

struct Verdict {
    Status status = Status::Unknown;
    std::string rule;
    Json certificate;
    std::vector<std::string> notes;
    std::vector<RuleOutcome> audit;  // R1..R7, filled in audit mode
    bool consistent = true;          // no CM rule and NotCM rule both apply
};

struct ClassifyOptions {
    std::size_t search_limit = 10;
    bool audit = false;
    std::size_t subgroup_bound = kDefaultSubgroupBound;
    CohomologyOptions cohomology;
};

/// Applies R1..R8 in order; the first applicable rule decides.
Verdict classify(const MatGroup& g, long p, const ClassifyOptions& opts = {});

/// Re-runs the test named by v.rule on the certificate data. Returns false
/// if any recorded quantity disagrees or the verdict does not follow.
bool check_certificate(const MatGroup& g, long p, const Verdict& v, const ClassifyOptions& opts = {});

/// Hypotheses of the cyclic Sylow criterion for (G, p).
struct CyclicSylowInfo {
    bool hypotheses = false;             // P nontrivial cyclic and O^p(G) != G
    bool bireflection_generated = false;
    std::size_t sylow_order = 1;
    std::size_t rank_quotient = 0;       // n - rank A^P
};

CyclicSylowInfo cyclic_sylow_info(const MatGroup& g, long p);

Json to_json(const Verdict& v);

}  // namespace minvar

#endif
