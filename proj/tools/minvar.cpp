#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include "minvar/error.hpp"
#include "minvar/report.hpp"

using namespace minvar;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitBound = 3;

struct Input {
    std::string file;
    std::string group;
    long p = 0;
};

void add_input(CLI::App* cmd, Input& in)
{
    cmd->add_option("file", in.file, "JobSpec JSON file; '-' or omitted reads stdin");
    cmd->add_option("--group", in.group, "use a built-in corpus group instead of a JobSpec");
    cmd->add_option("--p", in.p, "prime for --group (default: the entry's first prime)");
}

JobSpec load(const Input& in)
{
    if (!in.group.empty())
        return builtin_jobspec(in.group, in.p);
    std::string text;
    if (in.file.empty() || in.file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(in.file);
        if (!f)
            throw InvalidInput("cannot read " + in.file);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    JobSpec s = parse_jobspec(j);
    if (in.p != 0) {
        require_prime(in.p);
        s.p = in.p;
    }
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohen-Macaulay tests for multiplicative invariants over F_p"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "render a plain-text table instead of JSON");

    Input in;
    bool audit = false;
    std::optional<std::size_t> depth;
    std::optional<long> ball;

    auto* classify = app.add_subcommand("classify", "Cohen-Macaulay verdict with certificate");
    add_input(classify, in);
    classify->add_flag("--audit", audit, "evaluate every rule and check consistency");
    auto* analyze = app.add_subcommand("analyze", "group structure, isotropy and mu");
    add_input(analyze, in);
    auto* cohomology = app.add_subcommand("cohomology", "dim H^r(G, F_p) table and mu_p");
    add_input(cohomology, in);
    cohomology->add_option("--depth", depth, "largest degree r");
    auto* invariants = app.add_subcommand("invariants", "orbit-sum basis in a box of exponents");
    add_input(invariants, in);
    invariants->add_option("--ball", ball, "box radius B");
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria on the built-in corpus");

    for (auto* cmd : {classify, analyze, cohomology, invariants, selftest})
        cmd->add_flag("--human", human, "render a plain-text table instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        Json report;
        int code = 0;
        if (command == "selftest") {
            report = selftest_report(run_acceptance());
            code = report["passed"].get<bool>() ? 0 : 1;
        } else {
            JobSpec s = load(in);
            if (command == "classify") {
                s.options.audit |= audit;
                report = classify_report(s);
            } else if (command == "analyze") {
                report = analyze_report(s);
            } else if (command == "cohomology") {
                report = cohomology_report(s, depth.value_or(s.options.cohomology_depth));
            } else {
                report = invariants_report(s, ball.value_or(s.options.ball));
            }
        }
        if (human)
            std::cout << render_human(command, report);
        else
            std::cout << report.dump(2) << '\n';
        return code;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return kExitBound;
    }
}
