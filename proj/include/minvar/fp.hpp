#ifndef MINVAR_FP_HPP
#define MINVAR_FP_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace minvar::fp {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

/// Arithmetic in the prime field F_p.
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
    Elem inv(Elem a) const;
    Elem reduce(long long x) const;

    /// y += c * x
    void axpy(Vec& y, Elem c, const Vec& x) const;

private:
    std::uint32_t p_;
};

/// Dense matrix over F_p, row-major.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool is_zero() const;
};

Matrix multiply(const Field& f, const Matrix& x, const Matrix& y);
std::size_t rank(const Field& f, Matrix m);

/// Basis of {x : m x = 0}. With reversed = true, columns are eliminated in
/// reverse order; the kernel is the same subspace, the basis differs.
std::vector<Vec> nullspace(const Field& f, Matrix m, bool reversed = false);

/// Incrementally built subspace of F_p^dim kept in echelon form.
class Subspace {
public:
    Subspace(const Field& f, std::size_t dim) : f_(&f), dim_(dim) {}

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return dim_; }

    /// Residue of v after reduction by the current basis.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    /// Adds v; returns false if v was already in the span.
    bool insert(Vec v);

private:
    const Field* f_;
    std::size_t dim_;
    std::vector<Vec> basis_;          // each row monic at its pivot
    std::vector<std::size_t> pivot_;  // pivot column of each row
};

}  // namespace minvar::fp

#endif
