#ifndef MINVAR_ACCEPTANCE_HPP
#define MINVAR_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace minvar {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long long elapsed_ms = 0;
    long long limit_ms = 0;  // 0: no time limit
};

/// Runs the nine acceptance criteria over the built-in corpus.
std::vector<CriterionResult> run_acceptance();

/// "PASS  1  name  (12 ms, limit 1000 ms)  detail"
std::string format_line(const CriterionResult& r);

}  // namespace minvar

#endif
