#ifndef MINVAR_REPORT_HPP
#define MINVAR_REPORT_HPP

#include <string>
#include <vector>

#include "minvar/acceptance.hpp"
#include "minvar/jsonio.hpp"
#include "minvar/matgroup.hpp"

namespace minvar {

struct JobOptions {
    std::size_t max_group_order = kDefaultMaxOrder;
    std::size_t cohomology_depth = 10;
    long ball = 2;
    bool audit = false;
};

struct JobSpec {
    std::size_t n = 0;
    long p = 2;
    std::vector<IntMatrix> generators;
    JobOptions options;

    MatGroup group() const;
};

/// Documented bounds on JobSpec fields.
inline constexpr std::size_t kMaxRank = 12;
inline constexpr std::size_t kMaxGroupOrderLimit = 100000;
inline constexpr std::size_t kMaxCohomologyDepth = 24;
inline constexpr long kMaxBall = 8;

/// Throws InvalidInput on any schema or bound violation.
JobSpec parse_jobspec(const Json& j);
Json to_json(const JobSpec& s);

/// JobSpec for a corpus entry at prime p (first listed prime when p == 0).
JobSpec builtin_jobspec(const std::string& name, long p = 0);

Json classify_report(const JobSpec& s);
Json analyze_report(const JobSpec& s);
Json cohomology_report(const JobSpec& s, std::size_t depth);
Json invariants_report(const JobSpec& s, long ball);
Json selftest_report(const std::vector<CriterionResult>& results);

/// Plain-text rendering of any report above.
std::string render_human(const std::string& command, const Json& report);

}  // namespace minvar

#endif
