#ifndef MINVAR_EXACTLAT_HPP
#define MINVAR_EXACTLAT_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace minvar {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const Integer> d);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Integer>& entries() const { return a_; }

    IntVector column(std::size_t j) const;
    IntVector row(std::size_t i) const;
    IntMatrix transpose() const;

    /// Columns [first, first + count).
    IntMatrix column_block(std::size_t first, std::size_t count) const;
    /// Horizontal concatenation [*this | other].
    IntMatrix hcat(const IntMatrix& other) const;
    /// Vertical concatenation.
    IntMatrix vcat(const IntMatrix& other) const;

    IntVector apply(const IntVector& v) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;

    bool operator==(const IntMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    /// Lexicographic on (rows, cols, row-major entries).
    std::strong_ordering operator<=>(const IntMatrix& o) const;

    /// Fraction-free (Bareiss) determinant; square matrices only.
    Integer det() const;
    bool is_unimodular() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;
};

std::strong_ordering compare_vectors(const IntVector& a, const IntVector& b);

struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    std::size_t rank = 0;
};

/// Smith normal form: U * M * V = S with S diagonal, nonnegative, d1 | d2 | ...,
/// and U, V unimodular.
SmithForm snf(const IntMatrix& m);

/// Rank over Q, by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Inverse of a unimodular matrix; nullopt if |det| != 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Column Hermite normal form of the lattice spanned by the columns of m:
/// lower-triangular echelon, positive pivots, entries left of each pivot
/// reduced into [0, pivot). Zero columns are dropped.
IntMatrix column_hnf(const IntMatrix& m);

/// Basis (columns, in column HNF) of the integer kernel {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// A subgroup of Z^n given by a basis in column HNF.
class Sublattice {
public:
    Sublattice() = default;

    static Sublattice from_generators(std::size_t ambient_rank, const IntMatrix& gens);
    static Sublattice full(std::size_t n);
    static Sublattice zero(std::size_t n);

    std::size_t ambient_rank() const { return n_; }
    std::size_t rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    bool saturated() const { return saturated_; }

    bool contains(const IntVector& v) const;
    bool contains(const Sublattice& other) const;
    /// Coefficients of v in the basis, if v lies in the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;

    Sublattice intersect(const Sublattice& other) const;
    /// (L tensor Q) intersected with Z^n.
    Sublattice saturation() const;

    bool operator==(const Sublattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

private:
    Sublattice(std::size_t n, IntMatrix hnf);

    std::size_t n_ = 0;
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
    bool saturated_ = true;
};

/// {a : h a = a for all h}; always saturated.
Sublattice fixed_lattice(std::span<const IntMatrix> elems);
/// Lattice generated by the columns of h - I over all h. Not saturated in general.
Sublattice moved_lattice(std::span<const IntMatrix> elems);

struct QuotientInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, increasing by divisibility
};

/// Structure of Z^n / L.
QuotientInvariants quotient_invariants(const Sublattice& l);

struct CoverResult {
    bool covered = false;
    std::optional<IntVector> witness;
};

/// Decides whether ambient is the set-theoretic union of parts. When it is
/// not, the witness is a point of ambient lying in no part. Throws
/// InvalidInput if a part is not contained in ambient and BoundExceeded if
/// the finite quotient to enumerate has more than max_index cosets.
CoverResult covers(const Sublattice& ambient, std::span<const Sublattice> parts,
                   std::size_t max_index = std::size_t{1} << 22);

}  // namespace minvar

#endif
