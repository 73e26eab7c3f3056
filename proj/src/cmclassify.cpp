#include "minvar/cmclassify.hpp"

#include <functional>
#include <numeric>

#include "minvar/error.hpp"
#include "minvar/mulaction.hpp"

namespace minvar {

std::string to_string(Status s)
{
    switch (s) {
    case Status::CM: return "CM";
    case Status::NotCM: return "NotCM";
    default: return "Unknown";
    }
}

Status status_from_string(const std::string& s)
{
    if (s == "CM")
        return Status::CM;
    if (s == "NotCM")
        return Status::NotCM;
    if (s == "Unknown")
        return Status::Unknown;
    throw InvalidInput("unknown status " + s);
}

namespace {

struct Eval {
    RuleOutcome outcome;
    Json cert = Json::object();
    std::vector<std::string> notes;
};

Eval inapplicable(const std::string& rule, std::string reason)
{
    return {{rule, false, Status::Unknown, std::move(reason)}, Json::object(), {}};
}

Eval applies(const std::string& rule, Status s, Json cert, std::string reason = {})
{
    return {{rule, true, s, std::move(reason)}, std::move(cert), {}};
}

std::size_t rank_quotient(const MatGroup& h)
{
    return height_ir(h);
}

std::vector<std::size_t> cyclic_generators(const MatGroup& c)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.order(); ++i)
        if (c.element_order(i) == c.order())
            out.push_back(i);
    return out;
}

class Context {
public:
    Context(const MatGroup& g, long p, const ClassifyOptions& opts) : g_(g), p_(p), opts_(opts) {}

    const MatGroup& sylow_group()
    {
        if (!sylow_)
            sylow_ = sylow(g_, p_);
        return *sylow_;
    }

    Eval r1()
    {
        Json cert{{"group_order", g_.order()}, {"p", p_}, {"order_mod_p", g_.order() % p_}};
        if (g_.order() % p_ == 0)
            return inapplicable("R1", "p divides |G|");
        return applies("R1", Status::CM, cert);
    }

    Eval r2()
    {
        std::vector<std::size_t> chosen;
        std::vector<std::size_t> span{g_.identity_index()};
        for (std::size_t i = 0; i < g_.order(); ++i) {
            if (i == g_.identity_index() || !classify_element(g_.element(i)).is_reflection)
                continue;
            if (std::binary_search(span.begin(), span.end(), i))
                continue;
            chosen.push_back(i);
            span = g_.closure(chosen);
        }
        if (span.size() != g_.order())
            return inapplicable("R2", "reflections generate a subgroup of order " + std::to_string(span.size()));
        Json refl = Json::array();
        for (auto i : chosen)
            refl.push_back(to_json(g_.element(i)));
        return applies("R2", Status::CM, {{"reflections", refl}, {"group_order", g_.order()}});
    }

    Eval r3()
    {
        const MatGroup& P = sylow_group();
        const std::size_t q = rank_quotient(P);
        Json cert{{"sylow_generators", generators_json(P)}, {"sylow_order", P.order()}, {"rank_quotient", q}};
        if (q > 2)
            return inapplicable("R3", "rank A/A^P = " + std::to_string(q) + " > 2");
        return applies("R3", Status::CM, cert);
    }

    Eval r4()
    {
        const MatGroup& P = sylow_group();
        Context sub(P, p_, opts_);
        for (auto rule : {&Context::r1, &Context::r2, &Context::r3}) {
            Eval e = (sub.*rule)();
            if (e.outcome.applicable) {
                const std::size_t index = g_.order() / P.order();
                return applies("R4", Status::CM,
                               {{"sylow_generators", generators_json(P)},
                                {"sylow_order", P.order()},
                                {"index", index},
                                {"index_mod_p", index % p_},
                                {"sylow_rule", e.outcome.rule},
                                {"sylow_certificate", e.cert}});
            }
        }
        return inapplicable("R4", "R1-R3 do not apply to P");
    }

    Eval r5()
    {
        const MatGroup& P = sylow_group();
        if (P.order() == 1 || !P.is_cyclic())
            return inapplicable("R5", P.order() == 1 ? "P is trivial" : "P is not cyclic");
        const std::size_t core = op_core(g_, p_).order();
        if (core == g_.order())
            return inapplicable("R5", "O^p(G) = G");
        std::size_t min_drop = g_.n() + 1;
        std::size_t witness = 0;
        for (auto i : cyclic_generators(P)) {
            std::size_t d = classify_element(P.element(i)).rank_drop;
            if (d < min_drop) {
                min_drop = d;
                witness = i;
            }
        }
        if (min_drop <= 2)
            return inapplicable("R5", "P is generated by a bireflection");
        return applies("R5", Status::NotCM,
                       {{"sylow_generator", to_json(P.element(witness))},
                        {"sylow_order", P.order()},
                        {"min_generator_rank_drop", min_drop},
                        {"op_core_order", core}});
    }

    Eval r6()
    {
        const MatGroup& P = sylow_group();
        if (P.order() == 1)
            return inapplicable("R6", "P is trivial");
        if (!is_fixed_point_free(P))
            return inapplicable("R6", "P does not act fixed-point-freely");
        MuValue mu = mu_action(isotropy_subgroups(g_, opts_.subgroup_bound), static_cast<std::uint32_t>(p_),
                               opts_.search_limit, opts_.cohomology);
        if (!mu.exact || mu.infinite()) {
            Eval e = inapplicable("R6", "mu could not be determined exactly");
            e.notes.push_back("R6: mu is inexact (no nonzero cohomology found up to degree " +
                              std::to_string(opts_.search_limit) + ")");
            return e;
        }
        const Status s = g_.n() <= *mu.value + 1 ? Status::CM : Status::NotCM;
        return applies("R6", s,
                       {{"sylow_generators", generators_json(P)}, {"mu", *mu.value}, {"n", g_.n()}});
    }

    Eval r7()
    {
        const MatGroup& P = sylow_group();
        if (P.order() != static_cast<std::size_t>(p_))
            return inapplicable("R7", "|P| != p");
        const std::size_t h = rank_quotient(P);
        const std::size_t nc = subgroup_structure(g_, P).nc_index;
        Json cert{{"sylow_generator", to_json(P.element(cyclic_generators(P).front()))},
                  {"height", h},
                  {"nc_index", nc}};
        if (h <= 2 * nc)
            return inapplicable("R7", "height I_R(P) <= 2 [N:C]");
        return applies("R7", Status::NotCM, cert);
    }

    std::vector<Eval> all()
    {
        std::vector<Eval> out;
        for (auto rule : rules())
            out.push_back((this->*rule)());
        return out;
    }

    static std::vector<Eval (Context::*)()> rules()
    {
        return {&Context::r1, &Context::r2, &Context::r3, &Context::r4, &Context::r5, &Context::r6, &Context::r7};
    }

private:
    const MatGroup& g_;
    long p_;
    const ClassifyOptions& opts_;
    std::optional<MatGroup> sylow_;
};

Verdict from_eval(const Eval& e)
{
    Verdict v;
    v.status = e.outcome.status;
    v.rule = e.outcome.rule;
    v.certificate = e.cert;
    v.notes = e.notes;
    return v;
}

Verdict unknown(const std::vector<Eval>& evals)
{
    Verdict v;
    v.rule = "R8";
    Json reasons = Json::array();
    for (const auto& e : evals) {
        reasons.push_back({{"rule", e.outcome.rule}, {"reason", e.outcome.reason}});
        v.notes.insert(v.notes.end(), e.notes.begin(), e.notes.end());
    }
    v.certificate = {{"inapplicable", reasons}};
    return v;
}

}  // namespace

Verdict classify(const MatGroup& g, long p, const ClassifyOptions& opts)
{
    require_prime(p);
    Context ctx(g, p, opts);

    if (opts.audit) {
        std::vector<Eval> evals = ctx.all();
        bool cm = false, not_cm = false;
        for (const auto& e : evals) {
            cm |= e.outcome.applicable && e.outcome.status == Status::CM;
            not_cm |= e.outcome.applicable && e.outcome.status == Status::NotCM;
        }
        auto first = std::find_if(evals.begin(), evals.end(), [](const Eval& e) { return e.outcome.applicable; });
        Verdict v = first == evals.end() ? unknown(evals) : from_eval(*first);
        for (const auto& e : evals) {
            v.audit.push_back(e.outcome);
            if (first != evals.end())
                for (const auto& n : e.notes)
                    if (std::find(v.notes.begin(), v.notes.end(), n) == v.notes.end())
                        v.notes.push_back(n);
        }
        v.consistent = !(cm && not_cm);
        if (!v.consistent)
            v.notes.push_back("audit: CM and NotCM rules both apply");
        return v;
    }

    std::vector<Eval> seen;
    for (auto rule : Context::rules()) {
        Eval e = (ctx.*rule)();
        if (e.outcome.applicable) {
            Verdict v = from_eval(e);
            for (const auto& s : seen)
                v.notes.insert(v.notes.end(), s.notes.begin(), s.notes.end());
            return v;
        }
        seen.push_back(std::move(e));
    }
    return unknown(seen);
}

// ------------------------------------------------------------ certificates

namespace {

std::optional<MatGroup> checked_sylow(const MatGroup& g, long p, const Json& gens)
{
    std::vector<IntMatrix> m = matrices_from_json(gens);
    MatGroup P = MatGroup::generate(m, g.order());
    if (P.n() != g.n() || !g.contains(P) || P.order() != p_part(g.order(), p))
        return std::nullopt;
    return P;
}

bool rank_drop_above(const IntMatrix& x, std::size_t bound)
{
    return classify_element(x).rank_drop > bound;
}

}  // namespace

bool check_certificate(const MatGroup& g, long p, const Verdict& v, const ClassifyOptions& opts)
{
    const Json& c = v.certificate;
    try {
        if (v.rule == "R1")
            return v.status == Status::CM && g.order() % p != 0 && c.at("order_mod_p") == g.order() % p;
        if (v.rule == "R2") {
            std::vector<IntMatrix> refl = matrices_from_json(c.at("reflections"));
            for (const auto& r : refl)
                if (!g.index_of(r) || rank_drop_above(r, 1))
                    return false;
            if (refl.empty())
                return v.status == Status::CM && g.order() == 1;
            return v.status == Status::CM && MatGroup::generate(refl, g.order()) == g;
        }
        if (v.rule == "R3") {
            auto P = checked_sylow(g, p, c.at("sylow_generators"));
            return P && v.status == Status::CM && height_ir(*P) == c.at("rank_quotient") && height_ir(*P) <= 2;
        }
        if (v.rule == "R4") {
            auto P = checked_sylow(g, p, c.at("sylow_generators"));
            if (!P || v.status != Status::CM || (g.order() / P->order()) % p == 0)
                return false;
            Verdict sub;
            sub.status = Status::CM;
            sub.rule = c.at("sylow_rule");
            sub.certificate = c.at("sylow_certificate");
            if (sub.rule != "R1" && sub.rule != "R2" && sub.rule != "R3")
                return false;
            return check_certificate(*P, p, sub, opts);
        }
        if (v.rule == "R5") {
            IntMatrix x = matrix_from_json(c.at("sylow_generator"));
            if (!g.index_of(x) || v.status != Status::NotCM)
                return false;
            MatGroup P = MatGroup::generate(std::vector<IntMatrix>{x}, g.order());
            if (P.order() != p_part(g.order(), p) || P.order() == 1)
                return false;
            for (auto i : cyclic_generators(P))
                if (!rank_drop_above(P.element(i), 2))
                    return false;
            return op_core(g, p).order() < g.order();
        }
        if (v.rule == "R6") {
            auto P = checked_sylow(g, p, c.at("sylow_generators"));
            if (!P || P->order() == 1 || !is_fixed_point_free(*P))
                return false;
            MuValue mu = mu_action(isotropy_subgroups(g, opts.subgroup_bound), static_cast<std::uint32_t>(p),
                                   opts.search_limit, opts.cohomology);
            if (!mu.exact || mu.infinite() || *mu.value != c.at("mu").get<std::size_t>())
                return false;
            return v.status == (g.n() <= *mu.value + 1 ? Status::CM : Status::NotCM);
        }
        if (v.rule == "R7") {
            IntMatrix x = matrix_from_json(c.at("sylow_generator"));
            if (!g.index_of(x) || v.status != Status::NotCM)
                return false;
            MatGroup P = MatGroup::generate(std::vector<IntMatrix>{x}, g.order());
            if (P.order() != static_cast<std::size_t>(p) || p_part(g.order(), p) != P.order())
                return false;
            const std::size_t h = height_ir(P);
            const std::size_t nc = subgroup_structure(g, P).nc_index;
            return h == c.at("height") && nc == c.at("nc_index") && h > 2 * nc;
        }
        if (v.rule == "R8")
            return v.status == Status::Unknown && c.contains("inapplicable");
    } catch (const InvalidInput&) {
        return false;
    } catch (const Json::exception&) {
        return false;
    }
    return false;
}

CyclicSylowInfo cyclic_sylow_info(const MatGroup& g, long p)
{
    require_prime(p);
    CyclicSylowInfo info;
    MatGroup P = sylow(g, p);
    info.sylow_order = P.order();
    info.rank_quotient = height_ir(P);
    info.hypotheses = P.order() > 1 && P.is_cyclic() && op_core(g, p).order() != g.order();
    if (P.order() > 1 && P.is_cyclic())
        for (auto i : cyclic_generators(P))
            info.bireflection_generated |= classify_element(P.element(i)).is_bireflection;
    return info;
}

Json to_json(const Verdict& v)
{
    Json out{{"status", to_string(v.status)},
             {"rule", v.rule},
             {"certificate", v.certificate},
             {"notes", v.notes},
             {"consistent", v.consistent}};
    if (!v.audit.empty()) {
        Json audit = Json::array();
        for (const auto& r : v.audit) {
            Json e{{"rule", r.rule}, {"applicable", r.applicable}, {"reason", r.reason}};
            e["status"] = r.applicable ? Json(to_string(r.status)) : Json(nullptr);
            audit.push_back(e);
        }
        out["audit"] = audit;
    }
    return out;
}

}  // namespace minvar
