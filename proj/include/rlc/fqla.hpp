#ifndef RLC_FQLA_HPP
#define RLC_FQLA_HPP

#include <cstdint>
#include <vector>

#include "rlc/galois.hpp"

namespace rlc {

// Vector over F_q; coordinates are element indices.
struct Vector {
    FieldPtr field;
    std::vector<std::uint32_t> coords;

    std::size_t size() const { return coords.size(); }
    std::uint32_t operator[](std::size_t i) const { return coords[i]; }
    bool operator==(const Vector& o) const {
        return field->same_as(*o.field) && coords == o.coords;
    }
};

// Dense row-major matrix over F_q.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { a_[r * cols_ + c] = v; }
    const std::vector<std::uint32_t>& data() const { return a_; }
    std::vector<std::uint32_t>& data() { return a_; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    Matrix transposed() const;
    static Matrix from_rows(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& rows);

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && field_->same_as(*o.field_);
    }

  private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

std::uint32_t inner_product(const Vector& x, const Vector& v);

// Row rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

// Dimension of the linear span of a set of equal-length vectors.
std::size_t dim_span(const std::vector<Vector>& vs);

// Matrix-vector product y = M v.
Vector mat_vec(const Matrix& m, const Vector& v);

// Reduced row echelon form; pivot column indices are appended to *pivots when
// non-null. Zero rows are dropped, so the result has rank() rows.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// True iff v lies in the row space described by the echelon basis `basis`
// (any matrix whose rows span the space works; it is reduced internally).
class SpanTester {
  public:
    explicit SpanTester(const Matrix& generators);
    bool contains(const Vector& v) const;
    std::size_t dim() const { return basis_.rows(); }

  private:
    Matrix basis_; // RREF
    std::vector<std::size_t> pivots_;
};

// Incremental span tracker for tuple-enumeration loops: push vectors, query
// the running dimension, pop in LIFO order.
class SpanStack {
  public:
    SpanStack(FieldPtr f, std::size_t dim) : field_(std::move(f)), ambient_(dim) {}
    // Returns true if the vector enlarged the span.
    bool push(const std::vector<std::uint32_t>& v);
    void pop();
    std::size_t dim() const { return rows_.size(); }
    bool in_span(const std::vector<std::uint32_t>& v) const;

  private:
    FieldPtr field_;
    std::size_t ambient_;
    std::vector<std::vector<std::uint32_t>> rows_; // echelon, pivot-normalized
    std::vector<std::size_t> pivots_;
    std::vector<bool> pushed_; // whether each push added a row
};

// A pair (X, Lambda) of subsets of F_q^d: X is an ordered list of n row
// vectors (rows of a would-be generator matrix), Lambda a set of distinct
// message vectors. Lambda is kept sorted by coordinate tuple so that every
// construction derived from it is deterministic.
class WitnessPair {
  public:
    WitnessPair(FieldPtr f, std::size_t d, std::vector<std::vector<std::uint32_t>> x_rows,
                std::vector<std::vector<std::uint32_t>> lambda);

    const FieldPtr& field() const { return field_; }
    std::size_t d() const { return d_; }
    std::size_t n() const { return x_.size(); }
    const std::vector<std::vector<std::uint32_t>>& X() const { return x_; }
    const std::vector<std::vector<std::uint32_t>>& lambda() const { return lambda_; }

  private:
    FieldPtr field_;
    std::size_t d_;
    std::vector<std::vector<std::uint32_t>> x_;
    std::vector<std::vector<std::uint32_t>> lambda_;
};

// Projects (X, Lambda) into the span of Lambda: returns (X', Lambda') in
// ambient dimension d' = dim(span(Lambda)) with <v, x_j> = <v', x_j'> for the
// corresponding vectors. The change of basis depends only on Lambda: a greedy
// basis B of span(Lambda) is extracted in Lambda's canonical order, Lambda'
// holds coordinates with respect to B, and X' = { B x : x in X }.
WitnessPair project_pair(const WitnessPair& w);

// Same projection with the pieces exposed: the basis matrix B (d' x d) and
// the image of each Lambda vector in input (canonical) order, so callers can
// line up inner-product tables entry by entry.
struct Projection {
    WitnessPair pair;
    Matrix basis;
    std::vector<std::vector<std::uint32_t>> lambda_images;
};
Projection project_pair_detail(const WitnessPair& w);

} // namespace rlc

#endif
