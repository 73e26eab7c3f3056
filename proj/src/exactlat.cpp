#include "minvar/exactlat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "minvar/error.hpp"

namespace minvar {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InvalidInput("ragged matrix literal");
        for (long x : r)
            a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw InvalidInput("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw InvalidInput("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const
{
    IntMatrix b(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j)
            b(i, j) = (*this)(i, first + j);
    return b;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const
{
    if (rows_ != o.rows_)
        throw InvalidInput("hcat: row count mismatch");
    IntMatrix m(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j)
            m(i, cols_ + j) = o(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vcat(const IntMatrix& o) const
{
    if (rows_ == 0 && cols_ == 0)
        return o;
    if (cols_ != o.cols_)
        throw InvalidInput("vcat: column count mismatch");
    IntMatrix m(rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), m.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), m.a_.begin() + a_.size());
    return m;
}

IntVector IntMatrix::apply(const IntVector& v) const
{
    if (v.size() != cols_)
        throw InvalidInput("apply: size mismatch");
    IntVector r(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw InvalidInput("matrix product: size mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& x = (*this)(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += x * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix sum: size mismatch");
    IntMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] += o.a_[k];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix difference: size mismatch");
    IntMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] -= o.a_[k];
    return r;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix r = *this;
    for (auto& x : r.a_)
        x = -x;
    return r;
}

std::strong_ordering compare_vectors(const IntVector& a, const IntVector& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        int c = cmp(a[k], b[k]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

std::strong_ordering IntMatrix::operator<=>(const IntMatrix& o) const
{
    if (auto c = rows_ <=> o.rows_; c != 0)
        return c;
    if (auto c = cols_ <=> o.cols_; c != 0)
        return c;
    return compare_vectors(a_, o.a_);
}

Integer IntMatrix::det() const
{
    if (!is_square())
        throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t s = k + 1;
            while (s < n && sgn(m(s, k)) == 0)
                ++s;
            if (s == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const
{
    return is_square() && abs(det()) == 1;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------- SNF

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(src, j)) != 0)
            m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (sgn(m(i, src)) != 0)
            m(i, dst) += q * m(i, src);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm snf(const IntMatrix& m)
{
    const std::size_t R = m.rows(), C = m.cols();
    SmithForm f{m, IntMatrix::identity(R), IntMatrix::identity(C), 0};
    IntMatrix& S = f.S;

    std::size_t t = 0;
    for (; t < std::min(R, C); ++t) {
        bool done = false;
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::size_t bi = R, bj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (sgn(S(i, j)) != 0 && (bi == R || mpz_cmpabs(S(i, j).get_mpz_t(), S(bi, bj).get_mpz_t()) < 0)) {
                        bi = i;
                        bj = j;
                    }
            if (bi == R) {
                done = true;
                break;
            }
            swap_rows(S, t, bi);
            swap_rows(f.U, t, bi);
            swap_cols(S, t, bj);
            swap_cols(f.V, t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (sgn(S(i, t)) == 0)
                    continue;
                Integer q = -floor_div(S(i, t), S(t, t));
                add_row(S, i, t, q);
                add_row(f.U, i, t, q);
                if (sgn(S(i, t)) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (sgn(S(t, j)) == 0)
                    continue;
                Integer q = -floor_div(S(t, j), S(t, t));
                add_col(S, j, t, q);
                add_col(f.V, j, t, q);
                if (sgn(S(t, j)) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // pivot must divide the rest of the block
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == R)
                break;
            add_row(S, t, bad, Integer(1));
            add_row(f.U, t, bad, Integer(1));
        }
        if (done)
            break;
        if (sgn(S(t, t)) < 0) {
            for (std::size_t j = 0; j < C; ++j)
                S(t, j) = -S(t, j);
            for (std::size_t j = 0; j < R; ++j)
                f.U(t, j) = -f.U(t, j);
        }
    }
    f.rank = t;
    return f;
}

std::size_t rank(const IntMatrix& m0)
{
    IntMatrix m = m0;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t s = r;
        while (s < R && sgn(m(s, c)) == 0)
            ++s;
        if (s == R)
            continue;
        swap_rows(m, r, s);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m)
{
    if (!m.is_square())
        return std::nullopt;
    SmithForm f = snf(m);
    if (f.S != IntMatrix::identity(m.rows()))
        return std::nullopt;
    // U M V = I  =>  M^{-1} = V U
    return f.V * f.U;
}

// ---------------------------------------------------------------- HNF

IntMatrix column_hnf(const IntMatrix& m)
{
    IntMatrix H = m;
    const std::size_t R = H.rows(), C = H.cols();
    std::size_t c = 0;
    for (std::size_t i = 0; i < R && c < C; ++i) {
        for (;;) {
            std::size_t best = C;
            std::size_t nonzero = 0;
            for (std::size_t j = c; j < C; ++j)
                if (sgn(H(i, j)) != 0) {
                    ++nonzero;
                    if (best == C || mpz_cmpabs(H(i, j).get_mpz_t(), H(i, best).get_mpz_t()) < 0)
                        best = j;
                }
            if (nonzero == 0)
                break;
            swap_cols(H, c, best);
            if (nonzero == 1)
                break;
            for (std::size_t j = c + 1; j < C; ++j)
                if (sgn(H(i, j)) != 0)
                    add_col(H, j, c, -floor_div(H(i, j), H(i, c)));
        }
        if (sgn(H(i, c)) == 0)
            continue;
        if (sgn(H(i, c)) < 0)
            for (std::size_t k = 0; k < R; ++k)
                H(k, c) = -H(k, c);
        for (std::size_t j = 0; j < c; ++j)
            if (sgn(H(i, j)) != 0)
                add_col(H, j, c, -floor_div(H(i, j), H(i, c)));
        ++c;
    }
    return H.column_block(0, c);
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    SmithForm f = snf(m);
    IntMatrix k = f.V.column_block(f.rank, m.cols() - f.rank);
    return column_hnf(k);
}

// ---------------------------------------------------------------- Sublattice

Sublattice::Sublattice(std::size_t n, IntMatrix hnf) : n_(n), basis_(std::move(hnf))
{
    if (basis_.rows() == 0 && basis_.cols() == 0)
        basis_ = IntMatrix(n, 0);
    pivots_.reserve(basis_.cols());
    std::size_t row = 0;
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
        while (sgn(basis_(row, j)) == 0)
            ++row;
        pivots_.push_back(row);
    }
    saturated_ = quotient_invariants(*this).torsion.empty();
}

Sublattice Sublattice::from_generators(std::size_t ambient_rank, const IntMatrix& gens)
{
    if (gens.rows() != ambient_rank && !(gens.cols() == 0))
        throw InvalidInput("generator length does not match ambient rank");
    if (gens.cols() == 0)
        return zero(ambient_rank);
    return Sublattice(ambient_rank, column_hnf(gens));
}

Sublattice Sublattice::full(std::size_t n)
{
    return Sublattice(n, IntMatrix::identity(n));
}

Sublattice Sublattice::zero(std::size_t n)
{
    return Sublattice(n, IntMatrix(n, 0));
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& v0) const
{
    if (v0.size() != n_)
        throw InvalidInput("vector length does not match ambient rank");
    IntVector v = v0;
    IntVector coef(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        const std::size_t p = pivots_[j];
        if (!mpz_divisible_p(v[p].get_mpz_t(), basis_(p, j).get_mpz_t()))
            return std::nullopt;
        mpz_divexact(coef[j].get_mpz_t(), v[p].get_mpz_t(), basis_(p, j).get_mpz_t());
        if (sgn(coef[j]) != 0)
            for (std::size_t i = p; i < n_; ++i)
                v[i] -= coef[j] * basis_(i, j);
    }
    for (const auto& x : v)
        if (sgn(x) != 0)
            return std::nullopt;
    return coef;
}

bool Sublattice::contains(const IntVector& v) const
{
    return coordinates(v).has_value();
}

bool Sublattice::contains(const Sublattice& other) const
{
    if (other.n_ != n_)
        throw InvalidInput("ambient rank mismatch");
    for (std::size_t j = 0; j < other.rank(); ++j)
        if (!contains(other.basis_.column(j)))
            return false;
    return true;
}

Sublattice Sublattice::intersect(const Sublattice& other) const
{
    if (other.n_ != n_)
        throw InvalidInput("ambient rank mismatch");
    if (rank() == 0 || other.rank() == 0)
        return zero(n_);
    // B1 x = B2 y  <=>  [B1 | -B2] (x; y) = 0
    IntMatrix k = kernel_basis(basis_.hcat(-other.basis_));
    IntMatrix xs(rank(), k.cols());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            xs(i, j) = k(i, j);
    return from_generators(n_, basis_ * xs);
}

Sublattice Sublattice::saturation() const
{
    if (rank() == 0)
        return *this;
    SmithForm f = snf(basis_);
    IntMatrix uinv = *unimodular_inverse(f.U);
    return from_generators(n_, uinv.column_block(0, rank()));
}

// ---------------------------------------------------------------- lattices of a group

namespace {

std::size_t common_size(std::span<const IntMatrix> elems)
{
    if (elems.empty())
        throw InvalidInput("empty element list: ambient rank unknown");
    const std::size_t n = elems[0].rows();
    for (const auto& h : elems)
        if (h.rows() != n || h.cols() != n)
            throw InvalidInput("dimension mismatch among matrices");
    return n;
}

}  // namespace

Sublattice fixed_lattice(std::span<const IntMatrix> elems)
{
    const std::size_t n = common_size(elems);
    const IntMatrix I = IntMatrix::identity(n);
    IntMatrix stacked;
    for (const auto& h : elems)
        stacked = stacked.vcat(h - I);
    return Sublattice::from_generators(n, kernel_basis(stacked));
}

Sublattice moved_lattice(std::span<const IntMatrix> elems)
{
    const std::size_t n = common_size(elems);
    const IntMatrix I = IntMatrix::identity(n);
    IntMatrix gens(n, 0);
    for (const auto& h : elems)
        gens = gens.hcat(h - I);
    return Sublattice::from_generators(n, gens);
}

QuotientInvariants quotient_invariants(const Sublattice& l)
{
    QuotientInvariants q;
    q.free_rank = l.ambient_rank() - l.rank();
    if (l.rank() == 0)
        return q;
    SmithForm f = snf(l.basis());
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.S(i, i) != 1)
            q.torsion.push_back(f.S(i, i));
    return q;
}

// ---------------------------------------------------------------- covering

namespace {

// Calls visit(v) for every v in Z^r with max |v_i| == radius.
template <class F>
bool for_each_on_shell(std::size_t r, long radius, F&& visit)
{
    if (r == 0)
        return radius == 0 ? visit(std::vector<long>{}) : false;
    std::vector<long> v(r, -radius);
    for (;;) {
        bool on_shell = radius == 0 ||
                        std::any_of(v.begin(), v.end(), [&](long x) { return x == radius || x == -radius; });
        if (on_shell && visit(v))
            return true;
        std::size_t k = 0;
        while (k < r && v[k] == radius) {
            v[k] = -radius;
            ++k;
        }
        if (k == r)
            return false;
        ++v[k];
    }
}

// Smaller is preferred: (max norm, sum norm, reverse lexicographic).
bool preferred(const IntVector& a, const IntVector& b)
{
    Integer ma = 0, mb = 0, sa = 0, sb = 0;
    for (const auto& x : a) {
        Integer ax = abs(x);
        ma = std::max(ma, ax);
        sa += ax;
    }
    for (const auto& x : b) {
        Integer bx = abs(x);
        mb = std::max(mb, bx);
        sb += bx;
    }
    if (ma != mb)
        return ma < mb;
    if (sa != sb)
        return sa < sb;
    return compare_vectors(a, b) > 0;
}

bool in_any(std::span<const Sublattice> parts, const IntVector& v)
{
    return std::any_of(parts.begin(), parts.end(), [&](const Sublattice& l) { return l.contains(v); });
}

IntVector combine(const IntMatrix& basis, const IntVector& offset, const std::vector<long>& coef)
{
    IntVector v = offset;
    for (std::size_t j = 0; j < coef.size(); ++j)
        if (coef[j] != 0)
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += coef[j] * basis(i, j);
    return v;
}

// Search offset + span(basis) shell by shell for points outside every part;
// returns the preferred one among those found on the first productive shell.
std::optional<IntVector> search_witness(const IntMatrix& basis, const IntVector& offset,
                                        std::span<const Sublattice> parts, std::size_t budget)
{
    std::optional<IntVector> best;
    std::size_t visited = 0;
    for (long radius = 0; visited < budget; ++radius) {
        for_each_on_shell(basis.cols(), radius, [&](const std::vector<long>& coef) {
            ++visited;
            IntVector v = combine(basis, offset, coef);
            if (!in_any(parts, v) && (!best || preferred(v, *best)))
                best = std::move(v);
            return false;
        });
        if (best || basis.cols() == 0)
            return best;
    }
    return std::nullopt;
}

// Walks offset + t*d for a direction d in span(basis) that lies outside the
// rational span of every part of lower rank than the basis. Such a line meets
// each of those parts at most once, so a free point exists among the first
// |parts| + 1 steps.
IntVector line_witness(const IntMatrix& basis, const IntVector& offset, std::span<const Sublattice> parts)
{
    std::vector<Sublattice> spans;
    for (const auto& p : parts)
        if (p.rank() < basis.cols())
            spans.push_back(p.saturation());
    for (long s = 2;; ++s) {
        IntVector d(offset.size(), Integer(0));
        Integer w = 1;
        for (std::size_t j = 0; j < basis.cols(); ++j, w *= s)
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] += w * basis(i, j);
        if (in_any(spans, d))
            continue;
        IntVector v = offset;
        for (std::size_t t = 0; t <= parts.size(); ++t) {
            if (!in_any(parts, v))
                return v;
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += d[i];
        }
    }
}

}  // namespace

CoverResult covers(const Sublattice& ambient, std::span<const Sublattice> parts, std::size_t max_index)
{
    const std::size_t n = ambient.ambient_rank();
    for (const auto& part : parts)
        if (part.ambient_rank() != n || !ambient.contains(part))
            throw InvalidInput("covers: part not contained in ambient lattice");

    if (parts.empty())
        return {false, IntVector(n, Integer(0))};

    std::vector<Sublattice> full;
    for (const auto& part : parts)
        if (part.rank() == ambient.rank())
            full.push_back(part);
    for (const auto& part : full)
        if (part == ambient)
            return {true, std::nullopt};

    const IntMatrix& B = ambient.basis();
    const IntVector origin(n, Integer(0));
    const std::size_t budget = 200000;

    if (full.empty()) {
        // finitely many lower-rank subgroups never cover
        auto w = search_witness(B, origin, parts, budget);
        return {false, w ? *w : line_witness(B, origin, parts)};
    }

    // K = intersection of the full-rank parts has finite index in ambient;
    // each full-rank part is a union of K-cosets.
    Sublattice K = full[0];
    for (std::size_t k = 1; k < full.size(); ++k)
        K = K.intersect(full[k]);

    const std::size_t r = ambient.rank();
    IntMatrix coords(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        IntVector c = *ambient.coordinates(K.basis().column(j));
        for (std::size_t i = 0; i < r; ++i)
            coords(i, j) = c[i];
    }
    SmithForm f = snf(coords);
    Integer index = 1;
    for (std::size_t i = 0; i < r; ++i)
        index *= f.S(i, i);
    if (index > Integer(static_cast<unsigned long>(max_index)))
        throw BoundExceeded("covers: quotient of order " + index.get_str() + " exceeds enumeration bound");

    const IntMatrix reps = B * *unimodular_inverse(f.U);
    std::vector<long> x(r, 0);
    std::optional<IntVector> uncovered;
    for (;;) {
        IntVector v = combine(reps, origin, x);
        if (!in_any(full, v)) {
            uncovered = std::move(v);
            break;
        }
        std::size_t k = 0;
        while (k < r && x[k] + 1 == f.S(k, k).get_si()) {
            x[k] = 0;
            ++k;
        }
        if (k == r)
            break;
        ++x[k];
    }
    if (!uncovered)
        return {true, std::nullopt};

    auto w = search_witness(B, origin, parts, budget);
    return {false, w ? *w : line_witness(K.basis(), *uncovered, parts)};
}

}  // namespace minvar
