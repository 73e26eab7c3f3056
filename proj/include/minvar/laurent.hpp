#ifndef MINVAR_LAURENT_HPP
#define MINVAR_LAURENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minvar/exactlat.hpp"
#include "minvar/fp.hpp"
#include "minvar/matgroup.hpp"

namespace minvar {

using Exponent = std::vector<long>;

/// Sparse Laurent polynomial in n variables over F_p. Terms are kept in
/// lexicographic exponent order with no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly(std::size_t n, std::uint32_t p);

    static LaurentPoly monomial(std::size_t n, std::uint32_t p, const Exponent& e, long coeff = 1);
    static LaurentPoly constant(std::size_t n, std::uint32_t p, long c);

    std::size_t n() const { return n_; }
    std::uint32_t p() const { return field_.p(); }
    const std::map<Exponent, fp::Elem>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    fp::Elem coeff(const Exponent& e) const;

    void add_term(const Exponent& e, fp::Elem c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(fp::Elem c) const;

    bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && p() == o.p() && terms_ == o.terms_; }

    /// e.g. "x*y^-1 + 2*z"; variables are x, y, z, w for n <= 4 and x1..xn beyond
    std::string to_string() const;

private:
    void check_compatible(const LaurentPoly& o) const;

    std::size_t n_;
    fp::Field field_;
    std::map<Exponent, fp::Elem> terms_;
};

Exponent act_exponent(const IntMatrix& g, const Exponent& a);

/// g acting on the monomial with exponent a gives the monomial g a.
LaurentPoly act(const IntMatrix& g, const LaurentPoly& f);

/// Sum of the distinct monomials in the orbit of a.
LaurentPoly orbit_sum(const MatGroup& g, const Exponent& a, std::uint32_t p);
std::vector<Exponent> orbit(const MatGroup& g, const Exponent& a);

/// Invariant under every generator of g.
bool is_invariant(const LaurentPoly& f, const MatGroup& g);

struct BallDimension {
    std::size_t dim = 0;        // number of orbits in the G-closure of the box
    std::size_t burnside = 0;   // (1/|G|) sum_g |Fix(g) in closure|
    std::size_t closure_size = 0;
    std::vector<Exponent> orbit_representatives;  // lexicographically least per orbit
};

/// Dimension of the span of orbit sums supported in the G-closure of
/// {a : |a|_inf <= ball}, double-counted by Burnside's lemma. Throws
/// BoundExceeded if an orbit leaves the norm guard (default 8 * ball).
BallDimension invariant_dim_in_ball(const MatGroup& g, std::uint32_t p, long ball,
                                    std::optional<long> norm_guard = std::nullopt);

/// Ranks over F_2 of the pieces of R^{G_1} = R^Gamma + (xy + x^{-1}z) R^Gamma
/// restricted to the span V of monomials with |a|_inf <= ball.
struct G1Decomposition {
    long ball = 0;
    std::size_t dim_g1 = 0;     // G_1-invariants in V
    std::size_t dim_gamma = 0;  // Gamma-invariants in V
    std::size_t dim_theta = 0;  // (xy + x^{-1}z) * R^Gamma, intersected with V
    std::size_t dim_sum = 0;    // rank of the union of both spanning sets
    bool summands_invariant = false;
    bool direct = false;
    bool holds = false;
};

G1Decomposition check_g1_decomposition(std::uint32_t p, long ball);

/// The groups G_1 = <g_1> and Gamma = <g_1, diag(-1, 1, 1)> on Z^3.
IntMatrix g1_generator();
IntMatrix gamma_extra_generator();

}  // namespace minvar

#endif
