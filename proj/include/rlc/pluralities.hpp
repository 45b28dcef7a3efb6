#ifndef RLC_PLURALITIES_HPP
#define RLC_PLURALITIES_HPP

#include <cstdint>
#include <vector>

#include "rlc/fqla.hpp"
#include "rlc/rational.hpp"

namespace rlc {

// Occurrence statistics of the inner products { <x, v> : v in Lambda }.
//
// pl is the share of the most frequent value, pl_top_ell the combined share
// of the ell most frequent ones. argtop lists those ell values; ties break by
// ascending element index, and when fewer than ell distinct values occur the
// tail is padded with the smallest-index unused elements (share zero).
struct PluralityReport {
    std::vector<std::uint64_t> counts; // indexed by field element, sums to |Lambda|
    Rational pl;
    Rational pl_top_ell;
    std::vector<std::uint32_t> argtop; // exactly ell values
};

PluralityReport plurality_report(const Vector& x, const std::vector<Vector>& lambda,
                                 std::uint32_t ell);

Rational plurality(const Vector& x, const std::vector<Vector>& lambda);
Rational plurality_top(const Vector& x, const std::vector<Vector>& lambda, std::uint32_t ell);
std::vector<std::uint32_t> argtop(const Vector& x, const std::vector<Vector>& lambda,
                                  std::uint32_t ell);

// Raw-count variant used by enumeration loops: top-ell occurrence count of
// the inner products of `lambda` (rows of index vectors) with x.
std::uint64_t top_ell_count(const Field& f, const std::vector<std::uint32_t>& x,
                            const std::vector<std::vector<std::uint32_t>>& lambda,
                            std::uint32_t ell);

// The ell x n center z with z[i][j] = argtop_i(x_j, Lambda); it maximizes the
// average agreement (1/L) sum_v (1 - dist(z, Xv)) over all centers.
Matrix optimal_center(const WitnessPair& w, std::uint32_t ell);

// sum over x in X of pl^(ell)_x(Lambda), exact.
Rational sum_plurality(const WitnessPair& w, std::uint32_t ell);

// Definition of an (L, d, ell)-all-bad pair: X spans F^d, |Lambda| >= L,
// dim span(Lambda) <= d, and every row sees at most ell distinct values.
bool is_all_bad(const WitnessPair& w, std::uint64_t L, std::size_t d, std::uint32_t ell);

// (L, d, eps, ell)-average-bad: same rank/size conditions with the last one
// replaced by sum_plurality(w, ell) >= eps * n.
bool is_average_bad(const WitnessPair& w, std::uint64_t L, std::size_t d, const Rational& eps,
                    std::uint32_t ell);

} // namespace rlc

#endif
