#ifndef RLC_SIGMA_HPP
#define RLC_SIGMA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rlc/fqla.hpp"
#include "rlc/rational.hpp"
#include "rlc/rng.hpp"

namespace rlc {

inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;
inline constexpr std::uint64_t kDefaultSubsetBudget = 2'000'000;

// A set Lambda of distinct vectors in F_q^d, kept in canonical (sorted)
// order so that searches over it are deterministic.
class LambdaSet {
  public:
    LambdaSet(FieldPtr f, std::size_t d, std::vector<std::vector<std::uint32_t>> vectors);

    const FieldPtr& field() const { return field_; }
    std::size_t d() const { return d_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<std::vector<std::uint32_t>>& vectors() const { return vectors_; }
    std::size_t dim() const; // dim span

  private:
    FieldPtr field_;
    std::size_t d_;
    std::vector<std::vector<std::uint32_t>> vectors_;
};

// sigma_p(Lambda) = E q^(-dim span(v_1..v_p)) over p uniform draws with
// replacement. Exact value by full enumeration of the L^p ordered tuples.
Rational sigma_exact(const LambdaSet& lambda, std::uint32_t p,
                     std::uint64_t tuple_cap = kDefaultTupleCap);

// All of sigma_1..sigma_pmax from a single enumeration pass.
std::vector<Rational> sigma_exact_profile(const LambdaSet& lambda, std::uint32_t p_max,
                                          std::uint64_t tuple_cap = kDefaultTupleCap);

struct SigmaEstimate {
    Rational mean; // exact mean of the sampled q^(-dim) values
    double std_error;
    std::uint64_t samples;
};

// Monte Carlo estimator of sigma_p; deterministic for a fixed generator state.
SigmaEstimate sigma_mc(const LambdaSet& lambda, std::uint32_t p, std::uint64_t samples, Rng& rng);

// Serializable profile of sigma values with per-entry provenance.
struct SigmaProfileEntry {
    std::uint32_t p;
    Rational value;
    bool exact;
    std::uint64_t samples;  // 0 for exact entries
    double std_error;       // 0 for exact entries
};
struct SigmaProfile {
    std::size_t lambda_size;
    std::size_t ambient_dim;
    std::vector<SigmaProfileEntry> values;
};

struct GoodnessVerdict {
    bool good;
    std::optional<std::uint32_t> first_violating_p;
};

// Zero-error goodness: sigma_p <= (1 + 1/q) / q^p for all p = 1..p_max, with
// equality counting as good. Requires p_max <= (1 - zeta) d.
GoodnessVerdict is_good_zero_error(const LambdaSet& lambda, std::size_t d, const Rational& zeta,
                                   std::uint32_t p_max, std::uint64_t tuple_cap = kDefaultTupleCap);

// Average-radius goodness, two ranges over p = 1..d:
//   p <= (1-zeta)d        : sigma_p <= (1 + 1/q) / q^p
//   (1-zeta)d < p <= d    : sigma_p <= d / (q^(d(1-2 zeta)) * ell^p)
// The fractional-power threshold is compared exactly via big integers.
GoodnessVerdict is_good_average(const LambdaSet& lambda, std::size_t d, const Rational& zeta,
                                std::uint32_t ell, std::uint64_t tuple_cap = kDefaultTupleCap);

enum class SearchMode { Exhaustive, Greedy };

struct SubsetResult {
    std::vector<std::size_t> indices; // positions into lambda.vectors()
    SearchMode mode;
};

// A maximum-cardinality subset of Lambda of span dimension <= s. Exhaustive
// mode enumerates the spans of all independent subsets of size <= s and is
// exact (realizes T_s); above the node budget it falls back to a greedy
// sweep, recording the mode.
SubsetResult max_subset_of_dim(const LambdaSet& lambda, std::size_t s,
                               std::uint64_t budget = kDefaultSubsetBudget);

// Subset of dimension <= p and size >= T when one exists (always, when
// sigma_p(Lambda) > q^-p (1 + qT/L)^p with p < d). T = 0 returns the empty
// subset.
std::optional<SubsetResult> find_subset_dim_le_p(const LambdaSet& lambda, std::uint32_t p,
                                                 std::uint64_t T,
                                                 std::uint64_t budget = kDefaultSubsetBudget);

struct Extraction {
    std::vector<std::size_t> gamma_indices;
    std::uint32_t violating_p;
    SearchMode mode;
};

// Constructive extraction: when Lambda fails average goodness, returns a
// subset with dim <= d(1-zeta) of size >= |Lambda| * min{ 1/(2dq^2), zeta/(qe) },
// found by max_subset_of_dim sweeps over s <= d(1-zeta). Returns nullopt for
// good Lambda. Requires q >= ell^(2/zeta).
std::optional<Extraction> extract_low_dim_subset(const LambdaSet& lambda, std::size_t d,
                                                 const Rational& zeta, std::uint32_t ell,
                                                 std::uint64_t tuple_cap = kDefaultTupleCap,
                                                 std::uint64_t budget = kDefaultSubsetBudget);

// The guaranteed size fraction min{ 1/(2dq^2), zeta/(qe) }, rounded to a
// rational that is >= the true value, so |Gamma| >= lambda_size * this bound
// is the (slightly stronger) check used in tests.
Rational extraction_size_fraction(std::size_t d, std::uint32_t q, const Rational& zeta);

// Histogram over x in F^d of the top-ell occurrence count: hist[c] = number
// of x whose inner products with Lambda put c vectors on the ell most common
// values. The x = 0 row is included by default, matching expectations over
// uniformly random generator rows.
std::vector<std::uint64_t> pl_histogram(const LambdaSet& lambda, std::size_t d, std::uint32_t ell,
                                        bool include_zero_x = true,
                                        std::uint64_t cap = kDefaultTupleCap);

// E_x ( pl^(ell)_x(Lambda) - mu )^p over uniform x in F^d, exact.
Rational centered_moment_exact(const LambdaSet& lambda, std::size_t d, std::uint32_t p,
                               std::uint32_t ell, const Rational& mu, bool include_zero_x = true,
                               std::uint64_t cap = kDefaultTupleCap);

// E_x ( pl^(ell)_x(Lambda) )^p, exact.
Rational raw_moment_exact(const LambdaSet& lambda, std::size_t d, std::uint32_t p, std::uint32_t ell,
                          bool include_zero_x = true, std::uint64_t cap = kDefaultTupleCap);

} // namespace rlc

#endif
