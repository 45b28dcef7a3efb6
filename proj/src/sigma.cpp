#include "rlc/sigma.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rlc/pluralities.hpp"

namespace rlc {

LambdaSet::LambdaSet(FieldPtr f, std::size_t d, std::vector<std::vector<std::uint32_t>> vectors)
    : field_(std::move(f)), d_(d), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_) {
        if (v.size() != d_) fail(Errc::DimensionMismatch, "Lambda vector has wrong length");
        for (std::uint32_t c : v)
            if (c >= field_->q()) fail(Errc::BadInput, "coordinate out of field range");
    }
    std::sort(vectors_.begin(), vectors_.end());
    if (std::adjacent_find(vectors_.begin(), vectors_.end()) != vectors_.end())
        fail(Errc::DuplicateVector, "Lambda must not contain duplicate vectors");
}

std::size_t LambdaSet::dim() const {
    if (vectors_.empty()) return 0;
    return rank(Matrix::from_rows(field_, vectors_));
}

namespace {

// L^p with the cap enforced; throws rather than overflowing.
std::uint64_t checked_tuple_count(std::size_t L, std::uint32_t p, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < p; ++i) {
        if (total > cap / std::max<std::size_t>(L, 1))
            fail(Errc::EnumerationTooLarge, "L^p exceeds tuple enumeration cap");
        total *= L;
        if (total > cap) fail(Errc::EnumerationTooLarge, "L^p exceeds tuple enumeration cap");
    }
    return total;
}

struct TupleCounts {
    // counts[p][s] = number of ordered p-tuples whose span has dimension s.
    std::vector<std::vector<std::uint64_t>> counts;
};

// One depth-first pass enumerating all tuples up to length p_max. Once the
// running span saturates dim(Lambda), every deeper extension keeps that
// dimension, so whole subtrees are accounted for in closed form.
TupleCounts enumerate_tuples(const LambdaSet& lambda, std::uint32_t p_max, std::uint64_t cap) {
    const std::size_t L = lambda.size();
    if (L == 0) fail(Errc::EmptyLambda, "sigma of an empty set");
    checked_tuple_count(L, p_max, cap);

    const std::size_t full_dim = lambda.dim();
    std::vector<std::uint64_t> lpow(p_max + 1, 1);
    for (std::uint32_t i = 1; i <= p_max; ++i) lpow[i] = lpow[i - 1] * L;

    TupleCounts tc;
    tc.counts.assign(p_max + 1, std::vector<std::uint64_t>(full_dim + 1, 0));
    SpanStack span(lambda.field(), lambda.d());

    auto rec = [&](auto&& self, std::uint32_t depth) -> void {
        for (const auto& v : lambda.vectors()) {
            span.push(v);
            const std::size_t s = span.dim();
            tc.counts[depth][s] += 1;
            if (depth < p_max) {
                if (s == full_dim) {
                    for (std::uint32_t dd = depth + 1; dd <= p_max; ++dd)
                        tc.counts[dd][s] += lpow[dd - depth];
                } else {
                    self(self, depth + 1);
                }
            }
            span.pop();
        }
    };
    if (p_max >= 1) rec(rec, 1);
    return tc;
}

Rational sigma_from_counts(const std::vector<std::uint64_t>& by_dim, std::uint64_t total,
                           std::uint32_t q) {
    Rational acc = 0;
    for (std::size_t s = 0; s < by_dim.size(); ++s)
        if (by_dim[s]) acc += Rational(by_dim[s], big_pow(q, s));
    return acc / Rational(total);
}

} // namespace

Rational sigma_exact(const LambdaSet& lambda, std::uint32_t p, std::uint64_t tuple_cap) {
    if (p == 0) fail(Errc::BadInput, "sigma_p needs p >= 1");
    auto tc = enumerate_tuples(lambda, p, tuple_cap);
    const std::uint64_t total = checked_tuple_count(lambda.size(), p, tuple_cap);
    return sigma_from_counts(tc.counts[p], total, lambda.field()->q());
}

std::vector<Rational> sigma_exact_profile(const LambdaSet& lambda, std::uint32_t p_max,
                                          std::uint64_t tuple_cap) {
    if (p_max == 0) return {};
    auto tc = enumerate_tuples(lambda, p_max, tuple_cap);
    std::vector<Rational> out(p_max);
    std::uint64_t total = 1;
    for (std::uint32_t p = 1; p <= p_max; ++p) {
        total *= lambda.size();
        out[p - 1] = sigma_from_counts(tc.counts[p], total, lambda.field()->q());
    }
    return out;
}

SigmaEstimate sigma_mc(const LambdaSet& lambda, std::uint32_t p, std::uint64_t samples, Rng& rng) {
    if (samples < 1) fail(Errc::BadInput, "need samples >= 1");
    if (lambda.size() == 0) fail(Errc::EmptyLambda, "sigma of an empty set");
    const std::uint32_t q = lambda.field()->q();
    std::vector<std::uint64_t> by_dim(std::min<std::size_t>(p, lambda.d()) + 1, 0);
    SpanStack span(lambda.field(), lambda.d());
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint32_t pushed = 0;
        for (std::uint32_t j = 0; j < p; ++j) {
            span.push(lambda.vectors()[rng.below(lambda.size())]);
            ++pushed;
        }
        ++by_dim[span.dim()];
        while (pushed--) span.pop();
    }
    SigmaEstimate est;
    est.samples = samples;
    est.mean = sigma_from_counts(by_dim, samples, q);
    double mean_d = to_double(est.mean);
    double ss = 0;
    for (std::size_t s = 0; s < by_dim.size(); ++s) {
        if (!by_dim[s]) continue;
        const double v = std::pow(static_cast<double>(q), -static_cast<double>(s)) - mean_d;
        ss += static_cast<double>(by_dim[s]) * v * v;
    }
    est.std_error = samples > 1 ? std::sqrt(ss / (static_cast<double>(samples - 1)) /
                                            static_cast<double>(samples))
                                : 0.0;
    return est;
}

namespace {

// p <= (1 - zeta) d as an exact integer comparison.
bool p_in_small_range(std::uint32_t p, std::size_t d, const Rational& zeta) {
    const BigInt num = boost::multiprecision::numerator(zeta);
    const BigInt den = boost::multiprecision::denominator(zeta);
    return BigInt(p) * den <= BigInt(d) * (den - num);
}

Rational small_range_threshold(std::uint32_t q, std::uint32_t p) {
    return Rational(q + 1, big_pow(q, p + 1));
}

// sigma_p <= d / (q^(d(1-2 zeta)) ell^p), compared exactly.
bool meets_large_range_threshold(const Rational& sigma_p, std::size_t d, std::uint32_t q,
                                 const Rational& zeta, std::uint32_t ell, std::uint32_t p) {
    const BigInt a = boost::multiprecision::numerator(zeta);
    const BigInt b = boost::multiprecision::denominator(zeta);
    const BigInt u = BigInt(d) * (b - 2 * a); // exponent numerator, may be negative
    const Rational bound = Rational(d) / (sigma_p * rat_pow(Rational(ell), p));
    if (bound <= 0) return false;
    return q_pow_frac_le(q, u.convert_to<std::int64_t>(), b.convert_to<std::int64_t>(), bound);
}

} // namespace

GoodnessVerdict is_good_zero_error(const LambdaSet& lambda, std::size_t d, const Rational& zeta,
                                   std::uint32_t p_max, std::uint64_t tuple_cap) {
    if (!p_in_small_range(p_max, d, zeta))
        fail(Errc::DomainError, "p_max beyond (1 - zeta) d");
    const auto profile = sigma_exact_profile(lambda, p_max, tuple_cap);
    const std::uint32_t q = lambda.field()->q();
    for (std::uint32_t p = 1; p <= p_max; ++p)
        if (profile[p - 1] > small_range_threshold(q, p)) return {false, p};
    return {true, std::nullopt};
}

GoodnessVerdict is_good_average(const LambdaSet& lambda, std::size_t d, const Rational& zeta,
                                std::uint32_t ell, std::uint64_t tuple_cap) {
    if (ell < 1 || ell > lambda.field()->q()) fail(Errc::EllExceedsField, "need 1 <= ell <= q");
    const auto profile = sigma_exact_profile(lambda, static_cast<std::uint32_t>(d), tuple_cap);
    const std::uint32_t q = lambda.field()->q();
    for (std::uint32_t p = 1; p <= d; ++p) {
        const bool ok = p_in_small_range(p, d, zeta)
                            ? profile[p - 1] <= small_range_threshold(q, p)
                            : meets_large_range_threshold(profile[p - 1], d, q, zeta, ell, p);
        if (!ok) return {false, p};
    }
    return {true, std::nullopt};
}

namespace {

std::vector<std::size_t> members_of_span(const LambdaSet& lambda, const SpanStack& span) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (span.in_span(lambda.vectors()[i])) out.push_back(i);
    return out;
}

} // namespace

SubsetResult max_subset_of_dim(const LambdaSet& lambda, std::size_t s, std::uint64_t budget) {
    const std::size_t L = lambda.size();
    if (s >= lambda.dim()) {
        SubsetResult all;
        all.indices.resize(L);
        std::iota(all.indices.begin(), all.indices.end(), std::size_t{0});
        all.mode = SearchMode::Exhaustive;
        return all;
    }
    if (s == 0) {
        SubsetResult r;
        r.mode = SearchMode::Exhaustive;
        const std::vector<std::uint32_t> zero(lambda.d(), 0);
        for (std::size_t i = 0; i < L; ++i)
            if (lambda.vectors()[i] == zero) r.indices.push_back(i);
        return r;
    }

    // Node-count estimate: independent subsets of size <= s are at most
    // sum_t C(L, t).
    double est = 0, binom = 1;
    for (std::size_t t = 1; t <= s; ++t) {
        binom *= static_cast<double>(L - t + 1) / static_cast<double>(t);
        est += binom;
    }

    if (est <= static_cast<double>(budget)) {
        SubsetResult best;
        best.mode = SearchMode::Exhaustive;
        SpanStack span(lambda.field(), lambda.d());
        // The zero vector (if present) belongs to every span, so the empty
        // span baseline is covered by any candidate; still seed with it so
        // a Lambda inside a single point works.
        best.indices = members_of_span(lambda, span);

        auto rec = [&](auto&& self, std::size_t start) -> void {
            for (std::size_t i = start; i < L; ++i) {
                if (!span.push(lambda.vectors()[i])) {
                    span.pop();
                    continue; // dependent on current span; skip as basis element
                }
                auto members = members_of_span(lambda, span);
                if (members.size() > best.indices.size()) best.indices = std::move(members);
                if (span.dim() < s) self(self, i + 1);
                span.pop();
            }
        };
        rec(rec, 0);
        return best;
    }

    // Greedy fallback: repeatedly add the vector that keeps the dimension
    // minimal, never exceeding s.
    SubsetResult greedy;
    greedy.mode = SearchMode::Greedy;
    SpanStack span(lambda.field(), lambda.d());
    std::vector<bool> taken(L, false);
    for (;;) {
        std::size_t pick = L;
        bool pick_extends = true;
        for (std::size_t i = 0; i < L; ++i) {
            if (taken[i]) continue;
            const bool inside = span.in_span(lambda.vectors()[i]);
            if (inside) {
                pick = i;
                pick_extends = false;
                break; // dimension unchanged: always safe to take
            }
            if (pick == L && span.dim() < s) pick = i;
        }
        if (pick == L) break;
        taken[pick] = true;
        greedy.indices.push_back(pick);
        if (pick_extends) span.push(lambda.vectors()[pick]);
    }
    std::sort(greedy.indices.begin(), greedy.indices.end());
    return greedy;
}

std::optional<SubsetResult> find_subset_dim_le_p(const LambdaSet& lambda, std::uint32_t p,
                                                 std::uint64_t T, std::uint64_t budget) {
    if (T == 0) return SubsetResult{{}, SearchMode::Exhaustive};
    SubsetResult r = max_subset_of_dim(lambda, p, budget);
    if (r.indices.size() >= T) return r;
    return std::nullopt;
}

Rational extraction_size_fraction(std::size_t d, std::uint32_t q, const Rational& zeta) {
    // e rounded down, which rounds the zeta/(q e) branch up: the resulting
    // fraction dominates the true bound, so |Gamma| >= L * fraction is the
    // stronger claim.
    static const Rational e_lower(2718281828ull, 1000000000ull);
    const Rational a = Rational(1, 2 * BigInt(d) * q * q);
    const Rational b = zeta / (Rational(q) * e_lower);
    return std::min(a, b);
}

std::optional<Extraction> extract_low_dim_subset(const LambdaSet& lambda, std::size_t d,
                                                 const Rational& zeta, std::uint32_t ell,
                                                 std::uint64_t tuple_cap, std::uint64_t budget) {
    const std::uint32_t q = lambda.field()->q();
    if (zeta <= 0 || zeta >= 1) fail(Errc::DomainError, "zeta must lie in (0,1)");
    // Hypothesis q >= ell^(2/zeta)  <=>  q^zeta >= ell^2.
    {
        const BigInt a = boost::multiprecision::numerator(zeta);
        const BigInt b = boost::multiprecision::denominator(zeta);
        const BigInt lhs = big_pow(q, a.convert_to<std::uint64_t>());
        const BigInt rhs = big_pow(BigInt(ell) * ell, b.convert_to<std::uint64_t>());
        if (lhs < rhs) fail(Errc::HypothesisViolated, "requires q >= ell^(2/zeta)");
    }

    const GoodnessVerdict gv = is_good_average(lambda, d, zeta, ell, tuple_cap);
    if (gv.good) return std::nullopt;

    // s_max = floor(d (1 - zeta))
    const BigInt a = boost::multiprecision::numerator(zeta);
    const BigInt b = boost::multiprecision::denominator(zeta);
    const std::size_t s_max = (BigInt(d) * (b - a) / b).convert_to<std::size_t>();

    Extraction ext;
    ext.violating_p = *gv.first_violating_p;
    ext.mode = SearchMode::Exhaustive;
    for (std::size_t s = 0; s <= s_max; ++s) {
        SubsetResult r = max_subset_of_dim(lambda, s, budget);
        if (r.mode == SearchMode::Greedy) ext.mode = SearchMode::Greedy;
        if (r.indices.size() > ext.gamma_indices.size()) ext.gamma_indices = std::move(r.indices);
    }
    return ext;
}

std::vector<std::uint64_t> pl_histogram(const LambdaSet& lambda, std::size_t d, std::uint32_t ell,
                                        bool include_zero_x, std::uint64_t cap) {
    if (lambda.size() == 0) fail(Errc::EmptyLambda, "histogram of an empty set");
    if (lambda.d() != d) fail(Errc::DimensionMismatch, "ambient dimension mismatch");
    if (ell < 1 || ell > lambda.field()->q()) fail(Errc::EllExceedsField, "need 1 <= ell <= q");
    const Field& f = *lambda.field();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= f.q();
        if (total > cap) fail(Errc::EnumerationTooLarge, "q^d exceeds enumeration cap");
    }
    std::vector<std::uint64_t> hist(lambda.size() + 1, 0);
    std::vector<std::uint32_t> x(d, 0);
    for (std::uint64_t idx = 0;; ++idx) {
        if (include_zero_x || idx != 0) ++hist[top_ell_count(f, x, lambda.vectors(), ell)];
        if (idx + 1 == total) break;
        for (std::size_t j = 0; j < d; ++j) {
            if (++x[j] < f.q()) break;
            x[j] = 0;
        }
    }
    return hist;
}

Rational centered_moment_exact(const LambdaSet& lambda, std::size_t d, std::uint32_t p,
                               std::uint32_t ell, const Rational& mu, bool include_zero_x,
                               std::uint64_t cap) {
    const auto hist = pl_histogram(lambda, d, ell, include_zero_x, cap);
    const std::uint64_t L = lambda.size();
    std::uint64_t total = 0;
    Rational acc = 0;
    for (std::size_t c = 0; c < hist.size(); ++c) {
        if (!hist[c]) continue;
        total += hist[c];
        acc += Rational(hist[c]) * rat_pow(Rational(c, L) - mu, p);
    }
    return acc / Rational(total);
}

Rational raw_moment_exact(const LambdaSet& lambda, std::size_t d, std::uint32_t p, std::uint32_t ell,
                          bool include_zero_x, std::uint64_t cap) {
    return centered_moment_exact(lambda, d, p, ell, Rational(0), include_zero_x, cap);
}

} // namespace rlc
