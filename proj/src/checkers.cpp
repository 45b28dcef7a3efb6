#include "rlc/checkers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rlc {

Rational dist(const Vector& y, const Vector& z) {
    require_same_field(*y.field, *z.field);
    if (y.size() != z.size()) fail(Errc::DimensionMismatch, "dist length mismatch");
    if (y.size() == 0) fail(Errc::DimensionMismatch, "dist of empty vectors");
    std::size_t m = 0;
    for (std::size_t i = 0; i < y.size(); ++i) m += y.coords[i] != z.coords[i];
    return Rational(m, y.size());
}

Rational dist_list(const Matrix& z, const Vector& y) {
    require_same_field(*z.field(), *y.field);
    if (z.cols() != y.size()) fail(Errc::DimensionMismatch, "dist_list shape mismatch");
    if (y.size() == 0) fail(Errc::DimensionMismatch, "dist_list of empty vectors");
    std::size_t misses = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < z.rows() && !found; ++j) found = z.at(j, i) == y.coords[i];
        misses += !found;
    }
    return Rational(misses, y.size());
}

Codebook codebook_of(const LinearCode& c, std::uint64_t cap) {
    Codebook cb;
    cb.field = c.field;
    cb.n = c.n;
    auto words = enumerate_codewords(c, /*dedupe=*/false, cap);
    std::map<std::vector<std::uint32_t>, std::uint64_t> seen;
    for (std::uint64_t i = 0; i < words.size(); ++i) seen.emplace(words[i], i);
    // first-message order, which is ascending message index per distinct word
    std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> ordered;
    ordered.reserve(seen.size());
    for (auto& [w, idx] : seen) ordered.emplace_back(idx, w);
    std::sort(ordered.begin(), ordered.end());
    for (auto& [idx, w] : ordered) {
        cb.message_index.push_back(idx);
        cb.words.push_back(std::move(w));
    }
    return cb;
}

Codebook codebook_of_words(const FieldPtr& f, std::size_t n,
                           const std::vector<std::vector<std::uint32_t>>& words) {
    Codebook cb;
    cb.field = f;
    cb.n = n;
    std::map<std::vector<std::uint32_t>, std::uint64_t> seen;
    for (std::uint64_t i = 0; i < words.size(); ++i) {
        if (words[i].size() != n) fail(Errc::DimensionMismatch, "word length != n");
        seen.emplace(words[i], i);
    }
    std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> ordered;
    for (auto& [w, idx] : seen) ordered.emplace_back(idx, w);
    std::sort(ordered.begin(), ordered.end());
    for (auto& [idx, w] : ordered) {
        cb.message_index.push_back(idx);
        cb.words.push_back(std::move(w));
    }
    return cb;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap,
                          const char* what) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && total > cap / base) fail(Errc::EnumerationTooLarge, what);
        total *= base;
        if (total > cap) fail(Errc::EnumerationTooLarge, what);
    }
    return total;
}

// All size-ell subsets of {0..q-1} in lexicographic order.
std::vector<std::vector<std::uint32_t>> subset_catalog(std::uint32_t q, std::uint32_t ell) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(ell);
    std::iota(cur.begin(), cur.end(), 0u);
    for (;;) {
        out.push_back(cur);
        // next combination
        std::int64_t i = static_cast<std::int64_t>(ell) - 1;
        while (i >= 0 && cur[i] == q - ell + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (std::size_t j = i + 1; j < ell; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// Largest integer m with m/n < rho, or -1 when none (rho <= 0).
std::int64_t strict_radius_limit(const Rational& rho, std::size_t n) {
    const Rational rn = rho * Rational(n);
    const BigInt num = boost::multiprecision::numerator(rn);
    const BigInt den = boost::multiprecision::denominator(rn);
    BigInt fl = num / den;
    if (fl * den == num) fl -= 1; // rn integral: strict inequality excludes it
    if (fl < 0) return -1;
    if (fl > BigInt(n)) return static_cast<std::int64_t>(n);
    return fl.convert_to<std::int64_t>();
}

struct AgreementScan {
    // Per-codeword agreement counts at one center.
    std::vector<std::uint32_t> agr;
    // histogram over agreement values 0..n
    std::vector<std::uint32_t> hist;
};

// Sum of the L largest agreement counts, from the histogram.
std::uint64_t top_L_sum(const std::vector<std::uint32_t>& hist, std::uint64_t L) {
    std::uint64_t taken = 0, sum = 0;
    for (std::size_t c = hist.size(); c-- > 0 && taken < L;) {
        const std::uint64_t take = std::min<std::uint64_t>(L - taken, hist[c]);
        sum += take * c;
        taken += take;
    }
    return sum;
}

// L-th largest agreement count.
std::uint32_t lth_largest(const std::vector<std::uint32_t>& hist, std::uint64_t L) {
    std::uint64_t taken = 0;
    for (std::size_t c = hist.size(); c-- > 0;) {
        taken += hist[c];
        if (taken >= L) return static_cast<std::uint32_t>(c);
    }
    return 0;
}

// Codeword indices ranked by (agreement desc, index asc).
std::vector<std::size_t> rank_by_agreement(const std::vector<std::uint32_t>& agr) {
    std::vector<std::size_t> idx(agr.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return agr[a] > agr[b]; });
    return idx;
}

// Generic odometer scan over all centers (tuples of size-ell lists). The
// visitor sees the per-codeword agreement histogram; returning true asks for
// the current center index tuple to be recorded.
template <typename Visit>
void scan_centers(const Codebook& cb, std::uint32_t ell, std::uint64_t center_cap, Visit&& visit) {
    const std::uint32_t q = cb.field->q();
    if (ell < 1 || ell > q) fail(Errc::EllExceedsField, "need 1 <= ell <= q");
    // C(q, ell), guarded before the catalog is materialized.
    unsigned __int128 ncomb = 1;
    for (std::uint32_t i = 0; i < ell; ++i) {
        ncomb = ncomb * (q - i) / (i + 1);
        if (ncomb > center_cap) fail(Errc::EnumerationTooLarge, "list catalog exceeds cap");
    }
    checked_pow(static_cast<std::uint64_t>(ncomb), cb.n, center_cap,
                "list-collection count exceeds cap");
    const auto catalog = subset_catalog(q, ell);

    const std::size_t n = cb.n;
    const std::size_t W = cb.words.size();
    std::vector<std::uint8_t> member(n * q, 0);
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::uint32_t s : catalog[0]) member[j * q + s] = 1;

    std::vector<std::uint32_t> agr(W);
    std::vector<std::uint32_t> hist(n + 1);
    for (;;) {
        std::fill(hist.begin(), hist.end(), 0u);
        for (std::size_t w = 0; w < W; ++w) {
            const auto& word = cb.words[w];
            std::uint32_t a = 0;
            for (std::size_t j = 0; j < n; ++j) a += member[j * q + word[j]];
            agr[w] = a;
            ++hist[a];
        }
        visit(agr, hist, pos);
        // advance odometer (rightmost fastest => lexicographic tuples)
        std::size_t j = n;
        while (j-- > 0) {
            for (std::uint32_t s : catalog[pos[j]]) member[j * q + s] = 0;
            pos[j] = (pos[j] + 1) % catalog.size();
            for (std::uint32_t s : catalog[pos[j]]) member[j * q + s] = 1;
            if (pos[j] != 0) break;
            if (j == 0) return;
        }
    }
}

Matrix center_from_positions(const Codebook& cb, std::uint32_t ell,
                             const std::vector<std::size_t>& pos) {
    const auto catalog = subset_catalog(cb.field->q(), ell);
    Matrix z(cb.field, ell, cb.n);
    for (std::size_t j = 0; j < cb.n; ++j)
        for (std::uint32_t i = 0; i < ell; ++i) z.set(i, j, catalog[pos[j]][i]);
    return z;
}

} // namespace

Verdict check_list_decodable(const Codebook& cb, const Rational& rho, std::uint64_t L,
                             const CheckCaps& caps) {
    if (rho < 0 || rho > 1) fail(Errc::DomainError, "rho must lie in [0,1]");
    const std::uint32_t q = cb.field->q();
    const std::uint64_t centers = checked_pow(q, cb.n, caps.center_cap, "q^n exceeds center cap");
    const std::int64_t limit = strict_radius_limit(rho, cb.n);

    std::uint64_t best = 0;
    std::vector<std::uint32_t> best_z;
    std::vector<std::uint32_t> z(cb.n, 0);
    for (std::uint64_t it = 0;; ++it) {
        std::uint64_t count = 0;
        for (const auto& word : cb.words) {
            std::int64_t m = 0;
            for (std::size_t j = 0; j < cb.n; ++j) m += word[j] != z[j];
            count += m <= limit;
        }
        if (count > best) {
            best = count;
            best_z = z;
        }
        if (it + 1 == centers) break;
        for (std::size_t j = 0; j < cb.n; ++j) {
            if (++z[j] < q) break;
            z[j] = 0;
        }
    }

    Verdict v;
    v.statistic = Rational(best);
    v.holds = best < L;
    if (!v.holds) {
        Matrix zc(cb.field, 1, cb.n);
        for (std::size_t j = 0; j < cb.n; ++j) zc.set(0, j, best_z[j]);
        v.center = zc;
        for (std::size_t w = 0; w < cb.words.size(); ++w) {
            std::int64_t m = 0;
            for (std::size_t j = 0; j < cb.n; ++j) m += cb.words[w][j] != best_z[j];
            if (m <= limit) v.offender_messages.push_back(cb.message_index[w]);
        }
    }
    return v;
}

Verdict check_avg_radius_list_decodable(const Codebook& cb, const Rational& rho, std::uint64_t L,
                                        const CheckCaps& caps) {
    if (rho < 0 || rho > 1) fail(Errc::DomainError, "rho must lie in [0,1]");
    Verdict v;
    if (cb.words.size() < L) return v; // vacuous: no Omega of size >= L
    const std::uint32_t q = cb.field->q();
    const std::uint64_t centers = checked_pow(q, cb.n, caps.center_cap, "q^n exceeds center cap");

    std::uint64_t best_sum = UINT64_MAX;
    std::vector<std::uint32_t> best_z;
    std::vector<std::uint32_t> z(cb.n, 0);
    std::vector<std::uint32_t> hist(cb.n + 1);
    for (std::uint64_t it = 0;; ++it) {
        std::fill(hist.begin(), hist.end(), 0u);
        for (const auto& word : cb.words) {
            std::uint32_t m = 0;
            for (std::size_t j = 0; j < cb.n; ++j) m += word[j] != z[j];
            ++hist[m];
        }
        // sum of the L smallest mismatch counts
        std::uint64_t taken = 0, sum = 0;
        for (std::size_t m = 0; m <= cb.n && taken < L; ++m) {
            const std::uint64_t take = std::min<std::uint64_t>(L - taken, hist[m]);
            sum += take * m;
            taken += take;
        }
        if (sum < best_sum) {
            best_sum = sum;
            best_z = z;
        }
        if (it + 1 == centers) break;
        for (std::size_t j = 0; j < cb.n; ++j) {
            if (++z[j] < q) break;
            z[j] = 0;
        }
    }

    v.statistic = Rational(best_sum, L * cb.n);
    v.holds = *v.statistic >= rho;
    if (!v.holds) {
        Matrix zc(cb.field, 1, cb.n);
        for (std::size_t j = 0; j < cb.n; ++j) zc.set(0, j, best_z[j]);
        v.center = zc;
        std::vector<std::uint32_t> mm(cb.words.size());
        for (std::size_t w = 0; w < cb.words.size(); ++w) {
            std::uint32_t m = 0;
            for (std::size_t j = 0; j < cb.n; ++j) m += cb.words[w][j] != best_z[j];
            mm[w] = m;
        }
        std::vector<std::size_t> idx(cb.words.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return mm[a] < mm[b]; });
        for (std::uint64_t i = 0; i < L; ++i) v.offender_messages.push_back(cb.message_index[idx[i]]);
    }
    return v;
}

RecoveryAnalysis analyze_recovery(const Codebook& cb, std::uint32_t ell, std::uint64_t L,
                                  const CheckCaps& caps) {
    RecoveryAnalysis a;
    if (cb.words.size() < L) {
        a.vacuous = true;
        return a;
    }
    std::uint64_t best_top = 0, best_lth = 0;
    bool first = true;
    std::vector<std::size_t> pos_top, pos_lth;
    scan_centers(cb, ell, caps.center_cap,
                 [&](const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>& hist,
                     const std::vector<std::size_t>& pos) {
                     const std::uint64_t tl = top_L_sum(hist, L);
                     const std::uint64_t lth = lth_largest(hist, L);
                     if (first || tl > best_top) {
                         best_top = tl;
                         pos_top = pos;
                     }
                     if (first || lth > best_lth) {
                         best_lth = lth;
                         pos_lth = pos;
                     }
                     first = false;
                 });

    a.max_mean_topL = Rational(best_top, L * cb.n);
    a.max_Lth_agreement = Rational(best_lth, cb.n);
    a.center_topL = center_from_positions(cb, ell, pos_top);
    a.center_Lth = center_from_positions(cb, ell, pos_lth);

    // Offenders at the two extremal centers, ranked with index tie-break.
    auto agreements_at = [&](const Matrix& z) {
        std::vector<std::uint32_t> agr(cb.words.size());
        for (std::size_t w = 0; w < cb.words.size(); ++w) {
            std::uint32_t cnt = 0;
            for (std::size_t j = 0; j < cb.n; ++j) {
                bool in = false;
                for (std::uint32_t i = 0; i < ell && !in; ++i) in = z.at(i, j) == cb.words[w][j];
                cnt += in;
            }
            agr[w] = cnt;
        }
        return agr;
    };
    {
        const auto agr = agreements_at(a.center_topL);
        const auto ranked = rank_by_agreement(agr);
        for (std::uint64_t i = 0; i < L; ++i)
            a.topL_messages.push_back(cb.message_index[ranked[i]]);
    }
    {
        const auto agr = agreements_at(a.center_Lth);
        const auto ranked = rank_by_agreement(agr);
        for (std::size_t i = 0; i < ranked.size(); ++i)
            if (agr[ranked[i]] >= best_lth) a.above_messages.push_back(cb.message_index[ranked[i]]);
    }
    return a;
}

Verdict lr_verdict(const RecoveryAnalysis& a, const Rational& alpha) {
    if (alpha < 0 || alpha > 1) fail(Errc::DomainError, "alpha must lie in [0,1]");
    Verdict v;
    if (a.vacuous) return v;
    v.statistic = a.max_Lth_agreement;
    // alpha = 1 is zero-error list recovery: fewer than L codewords in any
    // rectangle, i.e. the L-th largest agreement stays below 1.
    v.holds = alpha == 1 ? *v.statistic < 1 : *v.statistic <= alpha;
    if (!v.holds) {
        v.center = a.center_Lth;
        v.offender_messages = a.above_messages;
    }
    return v;
}

Verdict arlr_verdict(const RecoveryAnalysis& a, const Rational& eps) {
    Verdict v;
    if (a.vacuous) return v;
    v.statistic = a.max_mean_topL;
    v.holds = *v.statistic <= eps;
    if (!v.holds) {
        v.center = a.center_topL;
        v.offender_messages = a.topL_messages;
    }
    return v;
}

Verdict zelr_verdict(const RecoveryAnalysis& a) {
    Verdict v;
    if (a.vacuous) return v;
    v.statistic = a.max_Lth_agreement;
    v.holds = *v.statistic < 1;
    if (!v.holds) {
        v.center = a.center_Lth;
        v.offender_messages = a.above_messages;
    }
    return v;
}

Verdict check_list_recoverable(const Codebook& cb, const Rational& alpha, std::uint32_t ell,
                               std::uint64_t L, const CheckCaps& caps) {
    return lr_verdict(analyze_recovery(cb, ell, L, caps), alpha);
}

Verdict check_avg_radius_list_recoverable(const Codebook& cb, const Rational& eps,
                                          std::uint32_t ell, std::uint64_t L,
                                          const CheckCaps& caps, SubsetMode mode) {
    if (mode == SubsetMode::FullEnumeration) {
        Verdict v;
        if (cb.words.size() < L) return v;
        v.statistic = max_mean_agreement_full_enum(cb, ell, L, caps);
        v.holds = *v.statistic <= eps;
        if (!v.holds) {
            // locate witness via the top-L route; the statistics agree
            RecoveryAnalysis a = analyze_recovery(cb, ell, L, caps);
            v.center = a.center_topL;
            v.offender_messages = a.topL_messages;
        }
        return v;
    }
    return arlr_verdict(analyze_recovery(cb, ell, L, caps), eps);
}

Verdict check_zero_error_lr(const Codebook& cb, std::uint32_t ell, std::uint64_t L,
                            const CheckCaps& caps) {
    return zelr_verdict(analyze_recovery(cb, ell, L, caps));
}

Verdict check_list_decodable(const LinearCode& c, const Rational& rho, std::uint64_t L,
                             const CheckCaps& caps) {
    return check_list_decodable(codebook_of(c, caps.codeword_cap), rho, L, caps);
}
Verdict check_avg_radius_list_decodable(const LinearCode& c, const Rational& rho, std::uint64_t L,
                                        const CheckCaps& caps) {
    return check_avg_radius_list_decodable(codebook_of(c, caps.codeword_cap), rho, L, caps);
}
Verdict check_list_recoverable(const LinearCode& c, const Rational& alpha, std::uint32_t ell,
                               std::uint64_t L, const CheckCaps& caps) {
    return check_list_recoverable(codebook_of(c, caps.codeword_cap), alpha, ell, L, caps);
}
Verdict check_avg_radius_list_recoverable(const LinearCode& c, const Rational& eps,
                                          std::uint32_t ell, std::uint64_t L, const CheckCaps& caps,
                                          SubsetMode mode) {
    return check_avg_radius_list_recoverable(codebook_of(c, caps.codeword_cap), eps, ell, L, caps,
                                             mode);
}
Verdict check_zero_error_lr(const LinearCode& c, std::uint32_t ell, std::uint64_t L,
                            const CheckCaps& caps) {
    return check_zero_error_lr(codebook_of(c, caps.codeword_cap), ell, L, caps);
}

namespace {

// G = X B with B = rref(G) (r x k) and X (n x r) holding each row's
// coordinates with respect to B, read off at B's pivot columns. The columns
// of X are codewords, X spans F^r, and message v encodes to X (B v).
struct Factorization {
    std::size_t r;
    Matrix B;
    std::vector<std::vector<std::uint32_t>> x_rows;
};

Factorization factor_generator(const LinearCode& c) {
    Factorization f;
    std::vector<std::size_t> pivots;
    f.B = rref(c.G, &pivots);
    f.r = f.B.rows();
    f.x_rows.reserve(c.n);
    for (std::size_t i = 0; i < c.n; ++i) {
        std::vector<std::uint32_t> row(f.r);
        for (std::size_t t = 0; t < f.r; ++t) row[t] = c.G.at(i, pivots[t]);
        f.x_rows.push_back(std::move(row));
    }
    return f;
}

// Codebook over the factored representation: one word per u in F^r, word =
// X u. Distinct u give distinct words because X spans F^r.
Codebook factored_codebook(const LinearCode& c, const Factorization& f, std::uint64_t cap) {
    const Field& fld = *c.field;
    const std::uint64_t total = checked_pow(fld.q(), f.r, cap, "q^rank exceeds cap");
    Codebook cb;
    cb.field = c.field;
    cb.n = c.n;
    cb.words.reserve(total);
    std::vector<std::uint32_t> u(f.r, 0);
    for (std::uint64_t idx = 0;; ++idx) {
        std::vector<std::uint32_t> word(c.n);
        for (std::size_t i = 0; i < c.n; ++i) {
            std::uint32_t acc = 0;
            for (std::size_t t = 0; t < f.r; ++t) acc = fld.add(acc, fld.mul(f.x_rows[i][t], u[t]));
            word[i] = acc;
        }
        cb.words.push_back(std::move(word));
        cb.message_index.push_back(idx); // index of u in F^r, not a message of C
        if (idx + 1 == total) break;
        for (std::size_t t = 0; t < f.r; ++t) {
            if (++u[t] < fld.q()) break;
            u[t] = 0;
        }
    }
    return cb;
}

} // namespace

AvgBadSearch search_average_bad(const LinearCode& c, std::uint32_t ell, std::uint64_t L,
                                const CheckCaps& caps) {
    AvgBadSearch s;
    const Factorization f = factor_generator(c);
    s.d = f.r;
    const Codebook cb = factored_codebook(c, f, caps.codeword_cap);
    if (cb.words.size() < L) {
        s.vacuous = true;
        return s;
    }

    std::uint64_t best_top = 0;
    bool first = true;
    std::vector<std::size_t> pos_top;
    scan_centers(cb, ell, caps.center_cap,
                 [&](const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>& hist,
                     const std::vector<std::size_t>& pos) {
                     const std::uint64_t tl = top_L_sum(hist, L);
                     if (first || tl > best_top) {
                         best_top = tl;
                         pos_top = pos;
                     }
                     first = false;
                 });
    s.best_mean_topL = Rational(best_top, L * cb.n);

    // Reconstruct the witness set at the extremal center: the L most-agreeing
    // u in F^r, ties resolved toward the smallest index.
    const Matrix z = center_from_positions(cb, ell, pos_top);
    std::vector<std::uint32_t> agr(cb.words.size());
    for (std::size_t w = 0; w < cb.words.size(); ++w) {
        std::uint32_t cnt = 0;
        for (std::size_t j = 0; j < cb.n; ++j) {
            bool in = false;
            for (std::uint32_t i = 0; i < ell && !in; ++i) in = z.at(i, j) == cb.words[w][j];
            cnt += in;
        }
        agr[w] = cnt;
    }
    const auto ranked = rank_by_agreement(agr);
    std::vector<std::vector<std::uint32_t>> lambda;
    for (std::uint64_t i = 0; i < L; ++i)
        lambda.push_back(message_of_index(*c.field, f.r, ranked[i]));

    WitnessPair pair(c.field, f.r, f.x_rows, std::move(lambda));
    // Proposition-level consistency: the plurality sum of the reconstructed
    // pair must equal the scan's optimum exactly (the argtop center is the
    // maximizer for its own top-L set).
    if (sum_plurality(pair, ell) != s.best_mean_topL * Rational(cb.n))
        fail(Errc::DomainError, "internal: plurality sum disagrees with center scan");
    if (!contains_cols(c, pair.X()))
        fail(Errc::DomainError, "internal: witness columns escaped the code");
    s.best_pair = std::move(pair);
    return s;
}

std::optional<WitnessPair> find_average_bad_witness(const AvgBadSearch& s, const Rational& eps,
                                                    std::uint64_t L, std::uint32_t ell,
                                                    std::size_t d_max) {
    if (s.vacuous || s.d > d_max || !s.best_pair) return std::nullopt;
    if (s.best_mean_topL < eps) return std::nullopt;
    if (!is_average_bad(*s.best_pair, L, s.d, eps, ell))
        fail(Errc::DomainError, "internal: candidate failed the badness re-check");
    return s.best_pair;
}

std::optional<WitnessPair> find_average_bad_witness(const LinearCode& c, const Rational& eps,
                                                    std::uint32_t ell, std::uint64_t L,
                                                    std::size_t d_max, const CheckCaps& caps) {
    if (d_max == 0) return std::nullopt;
    return find_average_bad_witness(search_average_bad(c, ell, L, caps), eps, L, ell, d_max);
}

AllBadSearch search_all_bad(const LinearCode& c, std::uint32_t ell, const CheckCaps& caps) {
    AllBadSearch s;
    const Factorization f = factor_generator(c);
    s.d = f.r;
    const Codebook cb = factored_codebook(c, f, caps.codeword_cap);

    std::uint64_t best = 0;
    bool first = true;
    std::vector<std::size_t> pos_best;
    scan_centers(cb, ell, caps.center_cap,
                 [&](const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>& hist,
                     const std::vector<std::size_t>& pos) {
                     const std::uint64_t inside = hist[cb.n];
                     if (first || inside > best) {
                         best = inside;
                         pos_best = pos;
                     }
                     first = false;
                 });
    s.max_rectangle_count = best;
    if (best == 0) return s;

    const Matrix z = center_from_positions(cb, ell, pos_best);
    std::vector<std::vector<std::uint32_t>> lambda;
    for (std::size_t w = 0; w < cb.words.size(); ++w) {
        bool inside = true;
        for (std::size_t j = 0; j < cb.n && inside; ++j) {
            bool in = false;
            for (std::uint32_t i = 0; i < ell && !in; ++i) in = z.at(i, j) == cb.words[w][j];
            inside = in;
        }
        if (inside) lambda.push_back(message_of_index(*c.field, f.r, w));
    }
    WitnessPair pair(c.field, f.r, f.x_rows, std::move(lambda));
    if (!contains_cols(c, pair.X()))
        fail(Errc::DomainError, "internal: witness columns escaped the code");
    s.pair_for_max = std::move(pair);
    return s;
}

std::optional<WitnessPair> find_all_bad_witness(const LinearCode& c, std::uint32_t ell,
                                                std::uint64_t L, std::size_t d_max,
                                                const CheckCaps& caps) {
    if (d_max == 0) return std::nullopt;
    AllBadSearch s = search_all_bad(c, ell, caps);
    if (s.d > d_max || s.max_rectangle_count < L || !s.pair_for_max) return std::nullopt;
    if (!is_all_bad(*s.pair_for_max, L, s.d, ell))
        fail(Errc::DomainError, "internal: candidate failed the all-bad re-check");
    return s.pair_for_max;
}

Rational max_mean_agreement_full_enum(const Codebook& cb, std::uint32_t ell, std::uint64_t L,
                                      const CheckCaps& caps) {
    const std::size_t W = cb.words.size();
    if (W < L) fail(Errc::DomainError, "no subsets of size >= L");
    Rational best = 0;
    bool first = true;
    scan_centers(cb, ell, caps.center_cap,
                 [&](const std::vector<std::uint32_t>& agr, const std::vector<std::uint32_t>&,
                     const std::vector<std::size_t>&) {
                     // all subsets of size exactly L (larger ones are dominated,
                     // which this oracle is used to confirm at top-L scale)
                     std::vector<std::uint64_t> pick(L);
                     std::iota(pick.begin(), pick.end(), std::uint64_t{0});
                     for (;;) {
                         std::uint64_t sum = 0;
                         for (std::uint64_t i : pick) sum += agr[i];
                         Rational mean(sum, L * cb.n);
                         if (first || mean > best) {
                             best = mean;
                             first = false;
                         }
                         std::int64_t i = static_cast<std::int64_t>(L) - 1;
                         while (i >= 0 && pick[i] == W - L + i) --i;
                         if (i < 0) break;
                         ++pick[i];
                         for (std::size_t j = i + 1; j < L; ++j) pick[j] = pick[j - 1] + 1;
                     }
                 });
    return best;
}

} // namespace rlc
