#ifndef SSCX_EXACTLINALG_HPP
#define SSCX_EXACTLINALG_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sscx {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Sparse vector: (index, value) pairs, strictly increasing index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/*
 * Exact sparse matrix over Q in compressed-column form.
 *
 * Columns are the images of domain basis vectors, so a matrix of a linear map
 * A -> B has dim B rows and dim A columns. Values are immutable once built;
 * every arithmetic operation returns a fresh matrix. No zero is ever stored.
 */
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    /// Takes ownership of columns; each is sorted, merged and stripped of zeros.
    static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    std::size_t nonzeros() const;
    bool is_zero() const;

    const SparseVector& column(std::size_t c) const { return cols_.at(c); }
    Rational at(std::size_t r, std::size_t c) const;

    SparseMatrix transpose() const;
    /// Columns [first, first + count).
    SparseMatrix column_range(std::size_t first, std::size_t count) const;
    SparseMatrix select_columns(const std::vector<std::size_t>& which) const;

    SparseMatrix operator+(const SparseMatrix& other) const;
    SparseMatrix operator-(const SparseMatrix& other) const;
    SparseMatrix operator-() const;
    friend SparseMatrix operator*(const Rational& s, const SparseMatrix& m);

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> cols_;
};

/// Sorts by index, merges duplicates and drops zeros.
void normalize(SparseVector& v);
SparseVector axpy(const Rational& alpha, const SparseVector& x, const SparseVector& y);

SparseVector apply(const SparseMatrix& m, const SparseVector& v);
/// Matrix product a * b (apply b first).
SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);
/// Horizontal concatenation [a | b].
SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b);
/// Block matrix assembled from (row offset, col offset, block) triples.
SparseMatrix assemble_blocks(std::size_t rows, std::size_t cols,
                             const std::vector<std::tuple<std::size_t, std::size_t, const SparseMatrix*>>& blocks);

// Elimination -----------------------------------------------------------------

/// Exact rank. Small matrices go through dense Bareiss elimination, larger ones
/// through sparse fraction-free elimination on primitive integer rows.
std::size_t rank(const SparseMatrix& m);
inline std::size_t kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }

/// Dense Bareiss rank, exposed so both elimination paths can be cross-checked.
std::size_t rank_dense_bareiss(const SparseMatrix& m);
/// Sparse fraction-free rank (no dense fallback).
std::size_t rank_sparse(const SparseMatrix& m);

/// Reduced row echelon form of the row space of m: returns (rows, pivots) with
/// each row scaled so its pivot entry is 1 and every other pivot column zero.
struct RowEchelon {
    std::vector<SparseVector> rows;
    std::vector<std::size_t> pivots;
};
RowEchelon reduced_row_echelon(const SparseMatrix& m);

// Subspaces -------------------------------------------------------------------

/*
 * A subspace of Q^ambient with a basis that is the identity on a fixed set of
 * coordinate positions. That normal form makes coordinates of a member vector
 * a plain lookup: read the vector at the positions, then confirm by
 * reconstruction.
 */
class SubspaceBasis {
public:
    SubspaceBasis() = default;

    static SubspaceBasis whole(std::size_t ambient);
    static SubspaceBasis coordinate(std::size_t ambient, std::vector<std::size_t> indices);
    /// Span of the columns of generators (dependent columns are dropped).
    static SubspaceBasis span_of(const SparseMatrix& generators);
    static SubspaceBasis kernel_of(const SparseMatrix& m);
    static SubspaceBasis image_of(const SparseMatrix& m) { return span_of(m); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    /// ambient_dim x dim matrix whose columns are the basis vectors.
    const SparseMatrix& vectors() const { return basis_; }
    const std::vector<std::size_t>& pivot_positions() const { return pivots_; }

    /// Coordinates of v in this basis, or nullopt if v is not in the span.
    std::optional<SparseVector> coordinates(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return coordinates(v).has_value(); }

private:
    SubspaceBasis(std::size_t ambient, SparseMatrix basis, std::vector<std::size_t> pivots);

    std::size_t ambient_ = 0;
    SparseMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Matrix of m restricted to dom, written in cod coordinates.
/// Throws RefutationError("image escapes codomain subspace") if m(dom) is not
/// contained in cod.
SparseMatrix restrict_map(const SparseMatrix& m, const SubspaceBasis& dom, const SubspaceBasis& cod);

/// True iff the spans coincide; decided by rank(A) = rank(B) = rank([A|B]).
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);
bool subspace_contains(const SubspaceBasis& outer, const SubspaceBasis& inner);

// Debug dump ------------------------------------------------------------------

/// One `row col numerator/denominator` triple per line, column-major order.
void write_triples(std::ostream& out, const SparseMatrix& m);
SparseMatrix read_triples(std::istream& in, std::size_t rows, std::size_t cols);

} // namespace sscx

#endif
