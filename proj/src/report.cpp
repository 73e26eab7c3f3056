#include "minvar/report.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "minvar/cmclassify.hpp"
#include "minvar/corpus.hpp"
#include "minvar/error.hpp"
#include "minvar/fpcohom.hpp"
#include "minvar/laurent.hpp"
#include "minvar/mulaction.hpp"

namespace minvar {

namespace {

const Json& require(const Json& j, const char* key)
{
    if (!j.contains(key))
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::int64_t integer_field(const Json& v, const char* key, std::int64_t lo, std::int64_t hi)
{
    if (!v.is_number_integer())
        throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
    const std::int64_t x = v.get<std::int64_t>();
    if (x < lo || x > hi)
        throw InvalidInput(std::string("field \"") + key + "\" out of range [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    return x;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known, const char* where)
{
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* name : known)
            ok |= k == name;
        if (!ok)
            throw InvalidInput("unknown field \"" + k + "\" in " + where);
    }
}

Json mu_json(const MuValue& m)
{
    return {{"value", m.value ? Json(*m.value) : Json(nullptr)}, {"exact", m.exact}};
}

CohomologyOptions cohomology_options(const JobSpec& s)
{
    CohomologyOptions o;
    o.max_depth = std::max<std::size_t>(o.max_depth, s.options.cohomology_depth);
    return o;
}

std::vector<long> prime_divisors(std::size_t m)
{
    std::vector<long> out;
    for (long q = 2; static_cast<std::size_t>(q) * static_cast<std::size_t>(q) <= m; ++q)
        if (m % q == 0) {
            out.push_back(q);
            while (m % q == 0)
                m /= q;
        }
    if (m > 1)
        out.push_back(static_cast<long>(m));
    return out;
}

long long micros_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

MatGroup JobSpec::group() const
{
    if (generators.empty())
        return MatGroup::trivial(n);
    return MatGroup::generate(generators, options.max_group_order);
}

JobSpec parse_jobspec(const Json& j)
{
    if (!j.is_object())
        throw InvalidInput("job spec must be a JSON object");
    reject_unknown(j, {"n", "p", "generators", "options"}, "job spec");
    JobSpec s;
    s.n = static_cast<std::size_t>(integer_field(require(j, "n"), "n", 1, kMaxRank));
    s.p = static_cast<long>(integer_field(require(j, "p"), "p", 2, (1LL << 31) - 1));
    if (!is_prime(s.p))
        throw InvalidInput("p = " + std::to_string(s.p) + " is not prime");
    s.generators = matrices_from_json(require(j, "generators"));
    for (const auto& g : s.generators)
        if (g.rows() != s.n || g.cols() != s.n)
            throw InvalidInput("generator is not " + std::to_string(s.n) + "x" + std::to_string(s.n));
    if (j.contains("options")) {
        const Json& o = j.at("options");
        if (!o.is_object())
            throw InvalidInput("options must be an object");
        reject_unknown(o, {"max_group_order", "cohomology_depth", "ball", "audit"}, "options");
        if (o.contains("max_group_order"))
            s.options.max_group_order = static_cast<std::size_t>(
                integer_field(o.at("max_group_order"), "max_group_order", 1, kMaxGroupOrderLimit));
        if (o.contains("cohomology_depth"))
            s.options.cohomology_depth = static_cast<std::size_t>(
                integer_field(o.at("cohomology_depth"), "cohomology_depth", 1, kMaxCohomologyDepth));
        if (o.contains("ball"))
            s.options.ball = static_cast<long>(integer_field(o.at("ball"), "ball", 0, kMaxBall));
        if (o.contains("audit")) {
            if (!o.at("audit").is_boolean())
                throw InvalidInput("field \"audit\" must be a boolean");
            s.options.audit = o.at("audit").get<bool>();
        }
    }
    return s;
}

Json to_json(const JobSpec& s)
{
    Json gens = Json::array();
    for (const auto& g : s.generators)
        gens.push_back(to_json(g));
    return {{"n", s.n},
            {"p", s.p},
            {"generators", gens},
            {"options",
             {{"max_group_order", s.options.max_group_order},
              {"cohomology_depth", s.options.cohomology_depth},
              {"ball", s.options.ball},
              {"audit", s.options.audit}}}};
}

JobSpec builtin_jobspec(const std::string& name, long p)
{
    auto e = find_builtin(name);
    if (!e) {
        std::string names;
        for (const auto& c : builtin_corpus())
            names += (names.empty() ? "" : ", ") + c.name;
        throw InvalidInput("unknown builtin group \"" + name + "\"; known: " + names);
    }
    JobSpec s;
    s.n = e->generators.front().rows();
    s.p = p == 0 ? e->primes.front() : p;
    require_prime(s.p);
    s.generators = e->generators;
    return s;
}

Json classify_report(const JobSpec& s)
{
    const auto t0 = std::chrono::steady_clock::now();
    MatGroup g = s.group();
    ClassifyOptions opts;
    opts.audit = s.options.audit;
    opts.search_limit = s.options.cohomology_depth;
    opts.cohomology = cohomology_options(s);
    Verdict v = classify(g, s.p, opts);
    Json out = to_json(v);
    out["n"] = s.n;
    out["p"] = s.p;
    out["group_order"] = g.order();
    out["timings"] = {{"total_us", micros_since(t0)}};
    return out;
}

Json analyze_report(const JobSpec& s)
{
    MatGroup g = s.group();
    Json out{{"n", s.n}, {"p", s.p}, {"group_order", g.order()}, {"generators", generators_json(g)}};

    Json syl = Json::array();
    for (long q : prime_divisors(g.order())) {
        MatGroup P = sylow(g, q);
        syl.push_back({{"prime", q}, {"order", P.order()}, {"generators", generators_json(P)}});
    }
    out["sylow"] = syl;

    std::size_t reflections = 0, bireflections = 0;
    std::map<std::string, std::size_t> orders;
    Json elements = Json::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        ElementProfile e = classify_element(g.element(i));
        if (i != g.identity_index()) {
            reflections += e.is_reflection;
            bireflections += e.is_bireflection;
        }
        ++orders[std::to_string(e.order)];
        if (g.order() <= 256)
            elements.push_back({{"matrix", to_json(g.element(i))},
                                {"order", e.order},
                                {"rank_drop", e.rank_drop},
                                {"reflection", e.is_reflection},
                                {"bireflection", e.is_bireflection}});
    }
    out["element_summary"] = {{"reflections", reflections}, {"bireflections", bireflections}, {"orders", orders}};
    if (g.order() <= 256)
        out["elements"] = elements;

    const std::vector<MatGroup> subs = subgroups(g);
    Json classes = Json::array();
    for (const auto& cls : conjugacy_classes(g, subs)) {
        const MatGroup& h = subs[cls.front()];
        std::vector<IntMatrix> gens = h.generators();
        classes.push_back({{"order", h.order()},
                           {"class_size", cls.size()},
                           {"generators", generators_json(h)},
                           {"rank_fixed", fixed_lattice(gens).rank()},
                           {"rank_moved", moved_lattice(gens).rank()},
                           {"height_ir", height_ir(h)}});
    }
    out["subgroup_classes"] = classes;
    out["height_ir"] = height_ir(g);

    IsotropyReport iso = isotropy_subgroups(g);
    Json isojson = Json::array();
    for (const auto& e : iso.subgroups)
        isojson.push_back({{"order", e.subgroup.order()},
                           {"class_size", e.class_size},
                           {"witness", to_json(e.witness)},
                           {"generators", generators_json(e.subgroup)}});
    out["isotropy"] = {{"subgroups", isojson}, {"complete", iso.complete}};
    try {
        out["mu"] = mu_json(mu_action(iso, static_cast<std::uint32_t>(s.p), s.options.cohomology_depth,
                                      cohomology_options(s)));
    } catch (const BoundExceeded& ex) {
        out["mu"] = {{"value", nullptr}, {"exact", false}, {"error", ex.what()}};
    }
    return out;
}

Json cohomology_report(const JobSpec& s, std::size_t depth)
{
    if (depth > kMaxCohomologyDepth)
        throw InvalidInput("depth out of range [0, " + std::to_string(kMaxCohomologyDepth) + "]");
    MatGroup g = s.group();
    CohomologyOptions opts = cohomology_options(s);
    opts.max_depth = std::max(opts.max_depth, depth);
    const std::uint32_t p = static_cast<std::uint32_t>(s.p);
    FpResolution res = resolution(g, p, depth + 1, opts);
    std::vector<std::size_t> dims = cohomology_dims(res);
    std::vector<std::size_t> ranks(res.ranks.begin(), res.ranks.begin() + static_cast<long>(depth + 1));
    return {{"n", s.n},
            {"p", s.p},
            {"group_order", g.order()},
            {"depth", depth},
            {"betti", dims},
            {"resolution_ranks", ranks},
            {"minimal", res.minimal},
            {"mu_p", mu_json(mu_p(g, p, std::max<std::size_t>(depth, 1), opts))}};
}

Json invariants_report(const JobSpec& s, long ball)
{
    if (ball < 0 || ball > kMaxBall)
        throw InvalidInput("ball out of range [0, " + std::to_string(kMaxBall) + "]");
    MatGroup g = s.group();
    const std::uint32_t p = static_cast<std::uint32_t>(s.p);
    BallDimension d = invariant_dim_in_ball(g, p, ball);
    Json basis = Json::array();
    for (const auto& r : d.orbit_representatives)
        basis.push_back({{"representative", r}, {"orbit_sum", to_json(orbit_sum(g, r, p))}});
    return {{"n", s.n},
            {"p", s.p},
            {"ball", ball},
            {"group_order", g.order()},
            {"dim", d.dim},
            {"burnside", d.burnside},
            {"closure_size", d.closure_size},
            {"basis", basis}};
}

Json selftest_report(const std::vector<CriterionResult>& results)
{
    Json crit = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all &= r.pass;
        crit.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"elapsed_ms", r.elapsed_ms},
                        {"limit_ms", r.limit_ms}});
    }
    return {{"criteria", crit}, {"passed", all}};
}

namespace {

std::string scalar(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string join_numbers(const Json& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : " ") + x.dump();
    return s;
}

}  // namespace

std::string render_human(const std::string& command, const Json& r)
{
    std::ostringstream os;
    if (command == "classify") {
        os << "status       " << scalar(r["status"]) << "\n"
           << "rule         " << scalar(r["rule"]) << "\n"
           << "group order  " << r["group_order"] << "\n"
           << "certificate  " << r["certificate"].dump() << "\n";
        for (const auto& n : r["notes"])
            os << "note         " << scalar(n) << "\n";
        if (r.contains("audit")) {
            os << "audit (" << (r["consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << ")\n";
            for (const auto& a : r["audit"])
                os << "  " << scalar(a["rule"]) << "  "
                   << (a["applicable"].get<bool>() ? scalar(a["status"]) : std::string("-")) << "  "
                   << scalar(a["reason"]) << "\n";
        }
    } else if (command == "analyze") {
        os << "group order  " << r["group_order"] << "\n"
           << "height_ir    " << r["height_ir"] << "\n"
           << "mu           " << (r["mu"]["value"].is_null() ? "inf" : r["mu"]["value"].dump())
           << (r["mu"]["exact"].get<bool>() ? "" : " (inexact)") << "\n";
        for (const auto& s : r["sylow"])
            os << "sylow p=" << s["prime"] << "  order " << s["order"] << "\n";
        os << "subgroup classes\n  order  size  rank A^H  height\n";
        for (const auto& c : r["subgroup_classes"])
            os << "  " << c["order"] << "  " << c["class_size"] << "  " << c["rank_fixed"] << "  " << c["height_ir"]
               << "\n";
        os << "isotropy\n";
        for (const auto& i : r["isotropy"]["subgroups"])
            os << "  order " << i["order"] << "  witness " << i["witness"].dump() << "\n";
    } else if (command == "cohomology") {
        os << "group order       " << r["group_order"] << "\n"
           << "dim H^r, r=0.." << r["depth"] << "  " << join_numbers(r["betti"]) << "\n"
           << "resolution ranks  " << join_numbers(r["resolution_ranks"])
           << (r["minimal"].get<bool>() ? " (minimal)" : " (not minimal)") << "\n"
           << "mu_p              " << (r["mu_p"]["value"].is_null() ? "inf" : r["mu_p"]["value"].dump()) << "\n";
    } else if (command == "invariants") {
        os << "dim " << r["dim"] << "  burnside " << r["burnside"] << "  closure " << r["closure_size"] << "\n";
        for (const auto& b : r["basis"]) {
            std::string terms;
            for (const auto& t : b["orbit_sum"])
                terms += (terms.empty() ? "" : " + ") + t["coeff"].dump() + "*" + t["exponents"].dump();
            os << "  " << terms << "\n";
        }
    } else if (command == "selftest") {
        for (const auto& c : r["criteria"]) {
            CriterionResult cr;
            cr.id = c["id"];
            cr.name = c["name"];
            cr.pass = c["pass"];
            cr.detail = c["detail"];
            cr.elapsed_ms = c["elapsed_ms"];
            cr.limit_ms = c["limit_ms"];
            os << format_line(cr) << "\n";
        }
    } else {
        os << r.dump(2) << "\n";
    }
    return os.str();
}

}  // namespace minvar
