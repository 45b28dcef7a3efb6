#include "rlc/fqla.hpp"

#include <algorithm>
#include <set>

namespace rlc {

Vector Matrix::row(std::size_t r) const {
    Vector v{field_, {}};
    v.coords.assign(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    return v;
}

Vector Matrix::col(std::size_t c) const {
    Vector v{field_, std::vector<std::uint32_t>(rows_)};
    for (std::size_t r = 0; r < rows_; ++r) v.coords[r] = at(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::from_rows(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail(Errc::DimensionMismatch, "ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::uint32_t inner_product(const Vector& x, const Vector& v) {
    require_same_field(*x.field, *v.field);
    if (x.size() != v.size()) fail(Errc::DimensionMismatch, "inner product length mismatch");
    const Field& f = *x.field;
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x.coords[i], v.coords[i]));
    return acc;
}

namespace {

// In-place forward elimination; returns rank. When `reduce` is set the result
// is full RREF with pivots normalized to 1 and cleared above.
std::size_t eliminate(Matrix& m, bool reduce, std::vector<std::size_t>* pivots) {
    const Field& f = *m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < cols; ++c) {
                std::uint32_t tmp = m.at(rank, c);
                m.set(rank, c, m.at(pivot, c));
                m.set(pivot, c, tmp);
            }
        const std::uint32_t pinv = f.inv(m.at(rank, col));
        for (std::size_t c = col; c < cols; ++c) m.set(rank, c, f.mul(m.at(rank, c), pinv));
        const std::size_t from = reduce ? 0 : rank + 1;
        for (std::size_t r = from; r < rows; ++r) {
            if (r == rank) continue;
            const std::uint32_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(rank, c))));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return eliminate(work, false, nullptr);
}

std::size_t dim_span(const std::vector<Vector>& vs) {
    if (vs.empty()) return 0;
    const std::size_t d = vs[0].size();
    Matrix m(vs[0].field, vs.size(), d);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != d) fail(Errc::DimensionMismatch, "mixed vector lengths");
        require_same_field(*vs[0].field, *vs[i].field);
        for (std::size_t j = 0; j < d; ++j) m.set(i, j, vs[i].coords[j]);
    }
    return rank(m);
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    require_same_field(*m.field(), *v.field);
    if (m.cols() != v.size()) fail(Errc::DimensionMismatch, "matrix/vector shape mismatch");
    const Field& f = *m.field();
    Vector out{m.field(), std::vector<std::uint32_t>(m.rows(), 0)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.at(r, c), v.coords[c]));
        out.coords[r] = acc;
    }
    return out;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix work = m;
    std::vector<std::size_t> piv;
    std::size_t rk = eliminate(work, true, &piv);
    Matrix out(m.field(), rk, m.cols());
    for (std::size_t r = 0; r < rk; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, work.at(r, c));
    if (pivots) *pivots = std::move(piv);
    return out;
}

SpanTester::SpanTester(const Matrix& generators) { basis_ = rref(generators, &pivots_); }

bool SpanTester::contains(const Vector& v) const {
    if (v.size() != basis_.cols()) fail(Errc::DimensionMismatch, "span test length mismatch");
    const Field& f = *v.field;
    std::vector<std::uint32_t> r = v.coords;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const std::uint32_t c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool SpanStack::push(const std::vector<std::uint32_t>& v) {
    const Field& f = *field_;
    std::vector<std::uint32_t> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint32_t c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(c, rows_[i][j]));
    }
    std::size_t piv = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (r[j] != 0) {
            piv = j;
            break;
        }
    if (piv == ambient_) {
        pushed_.push_back(false);
        return false;
    }
    const std::uint32_t pinv = f.inv(r[piv]);
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = f.mul(r[j], pinv);
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    pushed_.push_back(true);
    return true;
}

void SpanStack::pop() {
    if (pushed_.back()) {
        rows_.pop_back();
        pivots_.pop_back();
    }
    pushed_.pop_back();
}

bool SpanStack::in_span(const std::vector<std::uint32_t>& v) const {
    const Field& f = *field_;
    std::vector<std::uint32_t> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint32_t c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] = f.sub(r[j], f.mul(c, rows_[i][j]));
    }
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

WitnessPair::WitnessPair(FieldPtr f, std::size_t d, std::vector<std::vector<std::uint32_t>> x_rows,
                         std::vector<std::vector<std::uint32_t>> lambda)
    : field_(std::move(f)), d_(d), x_(std::move(x_rows)), lambda_(std::move(lambda)) {
    for (const auto& x : x_)
        if (x.size() != d_) fail(Errc::DimensionMismatch, "X row has wrong length");
    for (const auto& v : lambda_)
        if (v.size() != d_) fail(Errc::DimensionMismatch, "Lambda vector has wrong length");
    std::sort(lambda_.begin(), lambda_.end());
    if (std::adjacent_find(lambda_.begin(), lambda_.end()) != lambda_.end())
        fail(Errc::DuplicateVector, "Lambda must be a set of distinct vectors");
}

WitnessPair project_pair(const WitnessPair& w) { return project_pair_detail(w).pair; }

Projection project_pair_detail(const WitnessPair& w) {
    const FieldPtr& fp = w.field();
    const Field& f = *fp;
    const std::size_t d = w.d();

    // Greedy basis of span(Lambda) in canonical (sorted) order.
    SpanStack span(fp, d);
    std::vector<std::vector<std::uint32_t>> basis;
    for (const auto& v : w.lambda()) {
        if (!span.in_span(v)) {
            span.push(v);
            basis.push_back(v);
        }
    }
    const std::size_t dp = basis.size();

    // Coordinates of each Lambda vector with respect to the basis, solved by
    // elimination on [B^T | v].
    Matrix bt(fp, d, dp);
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < d; ++j) bt.set(j, i, basis[i][j]);
    Matrix aug(fp, d, dp + w.lambda().size());
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < dp; ++i) aug.set(j, i, bt.at(j, i));
    for (std::size_t k = 0; k < w.lambda().size(); ++k)
        for (std::size_t j = 0; j < d; ++j) aug.set(j, dp + k, w.lambda()[k][j]);
    std::vector<std::size_t> pivots;
    Matrix red = rref(aug, &pivots);
    // B^T has full column rank dp, so the first dp pivot columns are 0..dp-1
    // and row i of the reduced system gives coordinate i.
    std::vector<std::vector<std::uint32_t>> lambda_p;
    lambda_p.reserve(w.lambda().size());
    for (std::size_t k = 0; k < w.lambda().size(); ++k) {
        std::vector<std::uint32_t> coord(dp, 0);
        for (std::size_t i = 0; i < dp; ++i) coord[i] = red.at(i, dp + k);
        lambda_p.push_back(std::move(coord));
    }

    // X' = B x for each x in X.
    std::vector<std::vector<std::uint32_t>> xp;
    xp.reserve(w.X().size());
    for (const auto& x : w.X()) {
        std::vector<std::uint32_t> r(dp, 0);
        for (std::size_t i = 0; i < dp; ++i) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < d; ++j) acc = f.add(acc, f.mul(basis[i][j], x[j]));
            r[i] = acc;
        }
        xp.push_back(std::move(r));
    }

    Matrix bmat = Matrix::from_rows(fp, basis);
    WitnessPair out(fp, dp, std::move(xp), lambda_p);
    return Projection{std::move(out), std::move(bmat), std::move(lambda_p)};
}

} // namespace rlc
