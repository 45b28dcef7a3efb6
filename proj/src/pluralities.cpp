#include "rlc/pluralities.hpp"

#include <algorithm>
#include <numeric>

namespace rlc {

namespace {

std::vector<std::uint64_t> value_counts(const Field& f, const std::vector<std::uint32_t>& x,
                                        const std::vector<std::vector<std::uint32_t>>& lambda) {
    std::vector<std::uint64_t> counts(f.q(), 0);
    for (const auto& v : lambda) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], v[i]));
        ++counts[acc];
    }
    return counts;
}

// Field elements ordered by (count desc, index asc).
std::vector<std::uint32_t> order_by_count(const std::vector<std::uint64_t>& counts) {
    std::vector<std::uint32_t> idx(counts.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return a < b;
    });
    return idx;
}

void check_lambda_args(const Field& f, const std::vector<Vector>& lambda, std::uint32_t ell) {
    if (lambda.empty()) fail(Errc::EmptyLambda, "Lambda must be nonempty");
    if (ell < 1 || ell > f.q()) fail(Errc::EllExceedsField, "need 1 <= ell <= q");
}

} // namespace

PluralityReport plurality_report(const Vector& x, const std::vector<Vector>& lambda,
                                 std::uint32_t ell) {
    const Field& f = *x.field;
    check_lambda_args(f, lambda, ell);
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(lambda.size());
    for (const auto& v : lambda) {
        require_same_field(f, *v.field);
        if (v.size() != x.size()) fail(Errc::DimensionMismatch, "Lambda/x length mismatch");
        rows.push_back(v.coords);
    }
    PluralityReport rep;
    rep.counts = value_counts(f, x.coords, rows);
    const auto order = order_by_count(rep.counts);
    const std::uint64_t L = lambda.size();
    std::uint64_t top = rep.counts[order[0]];
    std::uint64_t top_ell = 0;
    rep.argtop.assign(order.begin(), order.begin() + ell);
    for (std::uint32_t i = 0; i < ell; ++i) top_ell += rep.counts[order[i]];
    rep.pl = Rational(top, L);
    rep.pl_top_ell = Rational(top_ell, L);
    return rep;
}

Rational plurality(const Vector& x, const std::vector<Vector>& lambda) {
    return plurality_report(x, lambda, 1).pl;
}

Rational plurality_top(const Vector& x, const std::vector<Vector>& lambda, std::uint32_t ell) {
    return plurality_report(x, lambda, ell).pl_top_ell;
}

std::vector<std::uint32_t> argtop(const Vector& x, const std::vector<Vector>& lambda,
                                  std::uint32_t ell) {
    return plurality_report(x, lambda, ell).argtop;
}

std::uint64_t top_ell_count(const Field& f, const std::vector<std::uint32_t>& x,
                            const std::vector<std::vector<std::uint32_t>>& lambda,
                            std::uint32_t ell) {
    const auto counts = value_counts(f, x, lambda);
    if (ell >= counts.size()) return lambda.size();
    // Partial selection of the ell largest counts.
    std::vector<std::uint64_t> c = counts;
    std::nth_element(c.begin(), c.begin() + ell, c.end(), std::greater<>());
    return std::accumulate(c.begin(), c.begin() + ell, std::uint64_t{0});
}

Matrix optimal_center(const WitnessPair& w, std::uint32_t ell) {
    const Field& f = *w.field();
    if (w.lambda().empty()) fail(Errc::EmptyLambda, "Lambda must be nonempty");
    if (ell < 1 || ell > f.q()) fail(Errc::EllExceedsField, "need 1 <= ell <= q");
    Matrix z(w.field(), ell, w.n());
    for (std::size_t j = 0; j < w.n(); ++j) {
        const auto counts = value_counts(f, w.X()[j], w.lambda());
        const auto order = order_by_count(counts);
        for (std::uint32_t i = 0; i < ell; ++i) z.set(i, j, order[i]);
    }
    return z;
}

Rational sum_plurality(const WitnessPair& w, std::uint32_t ell) {
    const Field& f = *w.field();
    if (w.lambda().empty()) fail(Errc::EmptyLambda, "Lambda must be nonempty");
    if (ell < 1 || ell > f.q()) fail(Errc::EllExceedsField, "need 1 <= ell <= q");
    std::uint64_t total = 0;
    for (const auto& x : w.X()) total += top_ell_count(f, x, w.lambda(), ell);
    return Rational(total, w.lambda().size());
}

namespace {

bool common_bad_conditions(const WitnessPair& w, std::uint64_t L, std::size_t d) {
    if (w.d() != d) return false;
    if (w.lambda().size() < L) return false;
    // (c) dim span(Lambda) <= d always holds inside F^d; kept as a literal
    // check of the definition.
    Matrix lm = Matrix::from_rows(w.field(), w.lambda());
    if (rank(lm) > d) return false;
    // (a) X spans F^d.
    Matrix xm = Matrix::from_rows(w.field(), w.X());
    return rank(xm) == d;
}

} // namespace

bool is_all_bad(const WitnessPair& w, std::uint64_t L, std::size_t d, std::uint32_t ell) {
    if (!common_bad_conditions(w, L, d)) return false;
    const Field& f = *w.field();
    for (const auto& x : w.X()) {
        const auto counts = value_counts(f, x, w.lambda());
        std::size_t distinct = 0;
        for (auto c : counts) distinct += c > 0;
        if (distinct > ell) return false;
    }
    return true;
}

bool is_average_bad(const WitnessPair& w, std::uint64_t L, std::size_t d, const Rational& eps,
                    std::uint32_t ell) {
    if (!common_bad_conditions(w, L, d)) return false;
    return sum_plurality(w, ell) >= eps * Rational(w.n());
}

} // namespace rlc
