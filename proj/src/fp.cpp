#include "minvar/fp.hpp"

#include <algorithm>
#include <utility>

#include "minvar/error.hpp"

namespace minvar::fp {

Field::Field(std::uint32_t p) : p_(p)
{
    require_prime(static_cast<long>(p));
    if (p >= (1u << 31))
        throw InvalidInput("prime too large for single-word field arithmetic");
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw InvalidInput("inverse of zero in F_p");
    // a^(p-2)
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
        if (e & 1)
            r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return static_cast<Elem>(r);
}

Elem Field::reduce(long long x) const
{
    long long r = x % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
}

void Field::axpy(Vec& y, Elem c, const Vec& x) const
{
    if (c == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i])
            y[i] = add(y[i], mul(c, x[i]));
}

bool Matrix::is_zero() const
{
    return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

Matrix multiply(const Field& f, const Matrix& x, const Matrix& y)
{
    if (x.cols != y.rows)
        throw InvalidInput("F_p matrix product: size mismatch");
    Matrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            Elem c = x(i, k);
            if (!c)
                continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                if (y(k, j))
                    r(i, j) = f.add(r(i, j), f.mul(c, y(k, j)));
        }
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t s = r;
        while (s < m.rows && m(s, c) == 0)
            ++s;
        if (s == m.rows)
            continue;
        if (s != r)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m(r, j), m(s, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols; ++j)
            m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Elem q = f.neg(m(i, c));
            for (std::size_t j = c; j < m.cols; ++j)
                if (m(r, j))
                    m(i, j) = f.add(m(i, j), f.mul(q, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Field& f, Matrix m)
{
    return rref(f, m).size();
}

std::vector<Vec> nullspace(const Field& f, Matrix m, bool reversed)
{
    const std::size_t C = m.cols;
    if (reversed)
        for (std::size_t i = 0; i < m.rows; ++i)
            std::reverse(m.a.begin() + i * C, m.a.begin() + (i + 1) * C);

    std::vector<std::size_t> pivots = rref(f, m);
    std::vector<bool> is_pivot(C, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(C, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(m(r, free));
        if (reversed)
            std::reverse(v.begin(), v.end());
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec Subspace::reduce(Vec v) const
{
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Elem c = v[pivot_[k]];
        if (c)
            f_->axpy(v, f_->neg(c), basis_[k]);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const
{
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::insert(Vec v)
{
    if (v.size() != dim_)
        throw InvalidInput("subspace insert: length mismatch");
    v = reduce(std::move(v));
    std::size_t c = 0;
    while (c < dim_ && v[c] == 0)
        ++c;
    if (c == dim_)
        return false;
    const Elem inv = f_->inv(v[c]);
    for (auto& x : v)
        x = f_->mul(x, inv);
    for (auto& b : basis_)
        if (b[c])
            f_->axpy(b, f_->neg(b[c]), v);
    basis_.push_back(std::move(v));
    pivot_.push_back(c);
    return true;
}

}  // namespace minvar::fp
