#include "minvar/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "minvar/error.hpp"

namespace minvar {

LaurentPoly::LaurentPoly(std::size_t n, std::uint32_t p) : n_(n), field_(p) {}

LaurentPoly LaurentPoly::monomial(std::size_t n, std::uint32_t p, const Exponent& e, long coeff)
{
    LaurentPoly f(n, p);
    f.add_term(e, f.field_.reduce(coeff));
    return f;
}

LaurentPoly LaurentPoly::constant(std::size_t n, std::uint32_t p, long c)
{
    return monomial(n, p, Exponent(n, 0), c);
}

fp::Elem LaurentPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Exponent& e, fp::Elem c)
{
    if (e.size() != n_)
        throw InvalidInput("exponent length does not match the number of variables");
    c %= field_.p();
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second = field_.add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const
{
    if (n_ != o.n_ || p() != o.p())
        throw InvalidInput("Laurent polynomials over different rings");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    return *this + o.scaled(field_.neg(1));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    check_compatible(o);
    LaurentPoly r(n_, p());
    Exponent e(n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (std::size_t i = 0; i < n_; ++i)
                e[i] = a[i] + b[i];
            r.add_term(e, field_.mul(ca, cb));
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(fp::Elem c) const
{
    LaurentPoly r(n_, p());
    for (const auto& [e, x] : terms_)
        r.add_term(e, field_.mul(x, c % p()));
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    static const char* names[] = {"x", "y", "z", "w"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ");
        first = false;
        bool unit = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
        if (c != 1 || unit)
            os << c;
        bool need_star = c != 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0)
                continue;
            os << (need_star ? "*" : "");
            need_star = true;
            if (n_ <= 4)
                os << names[i];
            else
                os << 'x' << i + 1;
            if (e[i] != 1)
                os << '^' << e[i];
        }
    }
    return os.str();
}

Exponent act_exponent(const IntMatrix& g, const Exponent& a)
{
    if (g.cols() != a.size() || !g.is_square())
        throw InvalidInput("act: size mismatch");
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            s += g(i, j) * a[j];
        if (!s.fits_slong_p())
            throw BoundExceeded("exponent overflow under group action");
        out[i] = s.get_si();
    }
    return out;
}

LaurentPoly act(const IntMatrix& g, const LaurentPoly& f)
{
    LaurentPoly r(f.n(), f.p());
    for (const auto& [e, c] : f.terms())
        r.add_term(act_exponent(g, e), c);
    return r;
}

std::vector<Exponent> orbit(const MatGroup& g, const Exponent& a)
{
    std::set<Exponent> o;
    for (const auto& x : g.elements())
        o.insert(act_exponent(x, a));
    return {o.begin(), o.end()};
}

LaurentPoly orbit_sum(const MatGroup& g, const Exponent& a, std::uint32_t p)
{
    LaurentPoly f(g.n(), p);
    for (const auto& e : orbit(g, a))
        f.add_term(e, 1);
    return f;
}

bool is_invariant(const LaurentPoly& f, const MatGroup& g)
{
    for (const auto& s : g.generators())
        if (!(act(s, f) == f))
            return false;
    return true;
}

namespace {

template <class F>
void for_each_in_box(std::size_t n, long radius, F&& visit)
{
    Exponent a(n, -radius);
    for (;;) {
        visit(a);
        std::size_t k = 0;
        while (k < n && a[k] == radius)
            a[k++] = -radius;
        if (k == n)
            return;
        ++a[k];
    }
}

long max_norm(const Exponent& a)
{
    long m = 0;
    for (long x : a)
        m = std::max(m, x < 0 ? -x : x);
    return m;
}

}  // namespace

BallDimension invariant_dim_in_ball(const MatGroup& g, std::uint32_t p, long ball, std::optional<long> norm_guard)
{
    require_prime(p);
    if (ball < 0)
        throw InvalidInput("ball radius must be nonnegative");
    const long guard = norm_guard.value_or(8 * ball);

    BallDimension out;
    std::set<Exponent> closure;
    for_each_in_box(g.n(), ball, [&](const Exponent& a) {
        if (closure.count(a))
            return;
        std::vector<Exponent> o = orbit(g, a);
        for (const auto& e : o) {
            if (max_norm(e) > guard)
                throw BoundExceeded("orbit leaves the norm guard " + std::to_string(guard));
            closure.insert(e);
        }
        out.orbit_representatives.push_back(o.front());
    });
    std::sort(out.orbit_representatives.begin(), out.orbit_representatives.end());
    out.dim = out.orbit_representatives.size();
    out.closure_size = closure.size();

    std::size_t fixed_total = 0;
    for (const auto& x : g.elements())
        for (const auto& a : closure)
            fixed_total += act_exponent(x, a) == a;
    if (fixed_total % g.order() != 0)
        throw std::logic_error("Burnside count is not divisible by |G|");
    out.burnside = fixed_total / g.order();
    if (out.burnside != out.dim)
        throw std::logic_error("orbit count and Burnside count disagree");
    return out;
}

// ---------------------------------------------------------------- G_1 check

IntMatrix g1_generator()
{
    return {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
}

IntMatrix gamma_extra_generator()
{
    return {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
}

namespace {

// Basis of the invariants of <gens> inside span(domain); domain must be
// stable under gens. Solved as a nullspace over F_p, without orbit counting.
std::vector<LaurentPoly> invariant_basis(const std::vector<Exponent>& domain, const std::vector<IntMatrix>& gens,
                                         const fp::Field& f)
{
    const std::size_t d = domain.size();
    fp::Matrix m(gens.size() * d, d);
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t j = 0; j < d; ++j) {
            Exponent img = act_exponent(gens[k], domain[j]);
            auto it = std::lower_bound(domain.begin(), domain.end(), img);
            if (it == domain.end() || *it != img)
                throw std::logic_error("domain is not stable under the group");
            const std::size_t i = static_cast<std::size_t>(it - domain.begin());
            m(k * d + i, j) = f.add(m(k * d + i, j), 1);
            m(k * d + j, j) = f.sub(m(k * d + j, j), 1);
        }
    std::vector<LaurentPoly> basis;
    for (const auto& v : fp::nullspace(f, std::move(m))) {
        LaurentPoly poly(3, f.p());
        for (std::size_t j = 0; j < d; ++j)
            poly.add_term(domain[j], v[j]);
        basis.push_back(std::move(poly));
    }
    return basis;
}

}  // namespace

G1Decomposition check_g1_decomposition(std::uint32_t p, long ball)
{
    if (p != 2)
        throw InvalidInput("the G_1 decomposition is stated for characteristic 2 only");
    if (ball < 0)
        throw InvalidInput("ball radius must be nonnegative");
    const fp::Field f(p);
    const IntMatrix g1 = g1_generator();
    const IntMatrix tau = gamma_extra_generator();
    const std::vector<IntMatrix> gamma{g1, tau};
    std::vector<IntMatrix> gamma_elements{IntMatrix::identity(3), g1, tau, g1 * tau};

    std::vector<Exponent> box;
    for_each_in_box(3, ball, [&](const Exponent& a) { box.push_back(a); });
    std::sort(box.begin(), box.end());

    G1Decomposition out;
    out.ball = ball;
    out.dim_g1 = invariant_basis(box, {g1}, f).size();
    const std::vector<LaurentPoly> gamma_basis = invariant_basis(box, gamma, f);
    out.dim_gamma = gamma_basis.size();

    // theta * b stays in the box iff supp(b) + {(1,1,0), (-1,0,1)} does; for
    // Gamma-invariant b that means supp(b) lies in the largest Gamma-stable
    // subset of such exponents.
    const LaurentPoly theta = LaurentPoly::monomial(3, p, {1, 1, 0}) + LaurentPoly::monomial(3, p, {-1, 0, 1});
    auto in_box = [&](const Exponent& a) { return max_norm(a) <= ball; };
    std::vector<Exponent> domain;
    for_each_in_box(3, ball + 1, [&](const Exponent& a) {
        for (const auto& gm : gamma_elements) {
            Exponent b = act_exponent(gm, a);
            if (!in_box({b[0] + 1, b[1] + 1, b[2]}) || !in_box({b[0] - 1, b[1], b[2] + 1}))
                return;
        }
        domain.push_back(a);
    });
    std::sort(domain.begin(), domain.end());
    std::vector<LaurentPoly> theta_part;
    for (const auto& b : invariant_basis(domain, gamma, f)) {
        LaurentPoly t = theta * b;
        for (const auto& [e, c] : t.terms())
            if (!in_box(e))
                throw std::logic_error("theta multiple escapes the box");
        theta_part.push_back(std::move(t));
    }

    auto rank_of = [&](const std::vector<const LaurentPoly*>& polys) {
        fp::Matrix m(polys.size(), box.size());
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (const auto& [e, c] : polys[i]->terms())
                m(i, static_cast<std::size_t>(std::lower_bound(box.begin(), box.end(), e) - box.begin())) = c;
        return fp::rank(f, std::move(m));
    };
    std::vector<const LaurentPoly*> all;
    std::vector<const LaurentPoly*> thetas;
    for (const auto& b : gamma_basis)
        all.push_back(&b);
    for (const auto& t : theta_part) {
        all.push_back(&t);
        thetas.push_back(&t);
    }
    out.dim_theta = rank_of(thetas);
    out.dim_sum = rank_of(all);

    const MatGroup G1 = MatGroup::generate(std::vector<IntMatrix>{g1});
    out.summands_invariant = std::all_of(all.begin(), all.end(), [&](const LaurentPoly* q) { return is_invariant(*q, G1); });
    out.direct = out.dim_sum == out.dim_gamma + out.dim_theta;
    out.holds = out.summands_invariant && out.direct && out.dim_sum == out.dim_g1;
    return out;
}

}  // namespace minvar
