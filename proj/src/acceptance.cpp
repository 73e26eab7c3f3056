#include "minvar/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "minvar/cmclassify.hpp"
#include "minvar/corpus.hpp"
#include "minvar/exactlat.hpp"
#include "minvar/fpcohom.hpp"
#include "minvar/laurent.hpp"

namespace minvar {

namespace {

MatGroup cyclic(const IntMatrix& m)
{
    return MatGroup::generate(std::vector<IntMatrix>{m});
}

MatGroup builtin(const std::string& name)
{
    return find_builtin(name)->group();
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n)
{
    IntMatrix t = IntMatrix::identity(n);
    if (n == 1)
        return rng() % 2 ? t : -t;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int s = 0; s < 8; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = coef(rng);
        t = t * e;
    }
    return t;
}

bool inversion_family(std::string& detail)
{
    bool ok = true;
    std::ostringstream os;
    for (std::size_t n = 1; n <= 5; ++n) {
        MatGroup g = cyclic(-IntMatrix::identity(n));
        Verdict v = classify(g, 2);
        const Status want = n <= 2 ? Status::CM : Status::NotCM;
        const bool good = v.status == want && check_certificate(g, 2, v);
        ok &= good;
        os << "n=" << n << ' ' << to_string(v.status) << '/' << v.rule << (good ? "" : " (wrong)") << "; ";
    }
    detail = os.str();
    return ok;
}

bool mu_formula(std::string& detail)
{
    struct Case {
        std::string label;
        MatGroup g;
        long p;
    };
    const std::vector<Case> cases{{"Z/2", builtin("inversion1"), 2}, {"Z/3", builtin("Z3rot"), 3},
                                  {"Z/4", builtin("Z4rot"), 2},      {"S3", builtin("S3"), 2},
                                  {"S3", builtin("S3"), 3}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
        MuValue mu = mu_p(c.g, static_cast<std::uint32_t>(c.p));
        os << c.label << " p=" << c.p << " mu=" << (mu.value ? std::to_string(*mu.value) : "inf");
        bool good = mu.exact && mu.value.has_value();
        if (p_part(c.g.order(), c.p) == static_cast<std::size_t>(c.p)) {
            const std::size_t f = mu_p_formula(c.g, c.p);
            os << " formula=" << f;
            good &= mu.value == f;
        }
        if (c.label == "S3" && c.p == 3)
            good &= mu.value == 3u;
        ok &= good;
        os << (good ? "; " : " (wrong); ");
    }
    detail = os.str();
    return ok;
}

bool cohomology_tables(std::string& detail)
{
    CohomologyOptions opts;
    const auto z2 = cohomology_table(builtin("inversion1").cayley_table(), 2, 8, opts);
    const auto z3 = cohomology_table(builtin("Z3rot").cayley_table(), 3, 8, opts);
    const auto s3 = cohomology_table(builtin("S3").cayley_table(), 3, 6, opts);
    std::ostringstream os;
    auto dump = [&](const char* label, const std::vector<std::size_t>& v) {
        os << label << " [";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << "] ";
    };
    dump("Z/2", z2);
    dump("Z/3", z3);
    dump("S3 p=3", s3);
    detail = os.str();
    return z2 == std::vector<std::size_t>(9, 1) && z3 == std::vector<std::size_t>(9, 1) &&
           s3 == std::vector<std::size_t>{1, 0, 0, 1, 1, 0, 0};
}

bool rank_duality(std::string& detail)
{
    std::size_t instances = 0, failures = 0;
    for (const auto& e : builtin_corpus()) {
        MatGroup g = e.group();
        for (const auto& h : subgroups(g)) {
            std::vector<IntMatrix> gens = h.generators();
            ++instances;
            failures += fixed_lattice(gens).rank() + moved_lattice(gens).rank() != g.n();
        }
    }
    detail = std::to_string(instances) + " subgroup instances, " + std::to_string(failures) + " failures";
    return failures == 0 && instances >= 50;
}

bool burnside(std::string& detail)
{
    std::size_t checks = 0, failures = 0;
    for (const auto& e : builtin_corpus()) {
        MatGroup g = e.group();
        if (g.n() > 4)
            continue;
        for (long b = 0; b <= 2; ++b) {
            ++checks;
            try {
                BallDimension d = invariant_dim_in_ball(g, static_cast<std::uint32_t>(e.primes.front()), b);
                failures += d.dim != d.burnside;
            } catch (const std::logic_error&) {
                ++failures;
            }
        }
    }
    detail = std::to_string(checks) + " (group, B) pairs, " + std::to_string(failures) + " mismatches";
    return failures == 0 && checks > 0;
}

bool g1_decomposition(std::string& detail)
{
    bool ok = true;
    std::ostringstream os;
    for (long b = 1; b <= 3; ++b) {
        G1Decomposition d = check_g1_decomposition(2, b);
        ok &= d.holds;
        os << "B=" << b << ": " << d.dim_g1 << " = " << d.dim_gamma << " + " << d.dim_theta
           << (d.holds ? "" : " (fails)") << "; ";
    }
    detail = os.str();
    return ok;
}

bool order_bound(std::string& detail)
{
    std::size_t cases = 0;
    bool ok = true;
    std::ostringstream os;
    for (const auto& e : builtin_corpus()) {
        MatGroup g = e.group();
        for (long p : e.primes) {
            CyclicSylowInfo info = cyclic_sylow_info(g, p);
            if (!info.hypotheses || !info.bireflection_generated)
                continue;
            ++cases;
            const bool good = info.sylow_order == 2 || info.sylow_order == 3 || info.sylow_order == 4;
            ok &= good;
            os << e.name << " p=" << p << " |P|=" << info.sylow_order << (good ? "; " : " (violates); ");
        }
    }
    detail = std::to_string(cases) + " cases: " + os.str();
    return ok && cases > 0;
}

bool soundness(std::string& detail)
{
    std::mt19937 rng(20260101);
    ClassifyOptions audit;
    audit.audit = true;
    std::size_t inputs = 0, inconsistent = 0, variant = 0, conjugates = 0;
    for (const auto& e : builtin_corpus()) {
        MatGroup g = e.group();
        for (long p : e.primes) {
            ++inputs;
            Verdict v = classify(g, p, audit);
            inconsistent += !v.consistent;
            for (int t = 0; t < 10; ++t) {
                IntMatrix u = random_unimodular(rng, g.n());
                IntMatrix ui = *unimodular_inverse(u);
                std::vector<IntMatrix> gens;
                for (const auto& x : g.generators())
                    gens.push_back(u * x * ui);
                Verdict w = classify(MatGroup::generate(gens), p);
                ++conjugates;
                variant += w.status != v.status;
            }
        }
    }
    detail = std::to_string(inputs) + " inputs, " + std::to_string(inconsistent) + " inconsistent; " +
             std::to_string(conjugates) + " conjugates, " + std::to_string(variant) + " changed verdicts";
    return inconsistent == 0 && variant == 0;
}

bool snf_properties(std::string& detail)
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::size_t failures = 0;
    for (int t = 0; t < 1000; ++t) {
        IntMatrix m(size(rng), size(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = entry(rng);
        SmithForm f = snf(m);
        bool ok = f.U * m * f.V == f.S && abs(f.U.det()) == 1 && abs(f.V.det()) == 1;
        for (std::size_t i = 0; i < f.S.rows() && ok; ++i)
            for (std::size_t j = 0; j < f.S.cols() && ok; ++j)
                if (i != j && f.S(i, j) != 0)
                    ok = false;
        const std::size_t k = std::min(f.S.rows(), f.S.cols());
        for (std::size_t i = 0; i < k && ok; ++i) {
            ok = f.S(i, i) >= 0;
            if (ok && i + 1 < k && f.S(i, i) != 0)
                ok = f.S(i + 1, i + 1) % f.S(i, i) == 0;
            if (ok && i + 1 < k && f.S(i, i) == 0)
                ok = f.S(i + 1, i + 1) == 0;
        }
        failures += !ok;
    }
    detail = "1000 matrices, " + std::to_string(failures) + " failures";
    return failures == 0;
}

}  // namespace

std::vector<CriterionResult> run_acceptance()
{
    struct Spec {
        int id;
        const char* name;
        long long limit_ms;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Spec> specs{
        {1, "inversion family CM iff n <= 2", 1000, inversion_family},
        {2, "mu_p from resolution vs formula", 10000, mu_formula},
        {3, "cohomology dimension tables", 0, cohomology_tables},
        {4, "rank duality rank A^H + rank [H,A] = n", 0, rank_duality},
        {5, "Burnside double count in balls", 0, burnside},
        {6, "G_1 invariants decompose over Gamma", 30000, g1_decomposition},
        {7, "cyclic Sylow order bound", 0, order_bound},
        {8, "classifier soundness and conjugation invariance", 0, soundness},
        {9, "Smith normal form properties", 5000, snf_properties},
    };
    std::vector<CriterionResult> out;
    for (const auto& s : specs) {
        CriterionResult r;
        r.id = s.id;
        r.name = s.name;
        r.limit_ms = s.limit_ms;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.pass = s.run(r.detail);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        if (r.limit_ms > 0 && r.elapsed_ms >= r.limit_ms) {
            r.pass = false;
            r.detail += " [time limit exceeded]";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const CriterionResult& r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  (" << r.elapsed_ms << " ms";
    if (r.limit_ms > 0)
        os << ", limit " << r.limit_ms << " ms";
    os << ")  " << r.detail;
    return os.str();
}

}  // namespace minvar
