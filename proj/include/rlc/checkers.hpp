#ifndef RLC_CHECKERS_HPP
#define RLC_CHECKERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rlc/codes.hpp"
#include "rlc/fqla.hpp"
#include "rlc/pluralities.hpp"
#include "rlc/rational.hpp"

namespace rlc {

// Relative Hamming distance (1/n) sum 1{y_i != z_i}.
Rational dist(const Vector& y, const Vector& z);

// List distance against an ell x n matrix of per-position lists:
// (1/n) sum_i 1{ y_i not in column i of z }.
Rational dist_list(const Matrix& z, const Vector& y);

// The set of distinct codewords of a code (or an explicit word list), each
// with the smallest message index that produces it. Checkers quantify over
// sets of codewords, so duplicates from rank-deficient generators collapse.
struct Codebook {
    FieldPtr field;
    std::size_t n = 0;
    std::vector<std::vector<std::uint32_t>> words;
    std::vector<std::uint64_t> message_index;
};

Codebook codebook_of(const LinearCode& c, std::uint64_t cap = kDefaultEnumerationCap);
Codebook codebook_of_words(const FieldPtr& f, std::size_t n,
                           const std::vector<std::vector<std::uint32_t>>& words);

struct CheckCaps {
    std::uint64_t center_cap = kDefaultEnumerationCap;   // q^n or C(q,ell)^n
    std::uint64_t codeword_cap = kDefaultEnumerationCap; // q^k
};

// Outcome of a property check. `statistic` is the extremal value the scan
// achieved and is absent only when the property holds vacuously (fewer than
// L distinct codewords for the average-radius/threshold checks):
//   LD    max over centers of |{ c : dist(c, z) < rho }|          holds: < L
//   ARLD  min over centers of the mean distance of the L nearest  holds: >= rho
//   LR    max over lists of the L-th largest agreement            holds: <= alpha (< 1 at alpha = 1)
//   ARLR  max over lists of the mean of the top-L agreements      holds: <= eps
//   ZELR  same statistic as LR                                    holds: < 1
// The witness (present iff the property fails) is the offending center --
// 1 x n for the decoding checks, ell x n for the recovery checks -- plus the
// message indices of the offending codewords.
struct Verdict {
    bool holds = true;
    std::optional<Rational> statistic;
    std::optional<Matrix> center;
    std::vector<std::uint64_t> offender_messages;
};

Verdict check_list_decodable(const Codebook& cb, const Rational& rho, std::uint64_t L,
                             const CheckCaps& caps = {});
Verdict check_avg_radius_list_decodable(const Codebook& cb, const Rational& rho, std::uint64_t L,
                                        const CheckCaps& caps = {});

// Exhaustive scan over all collections of size-ell lists; both recovery
// statistics come from the same pass. Smaller lists are dominated by their
// size-ell supersets, so only full-size lists are enumerated.
struct RecoveryAnalysis {
    bool vacuous = false;         // fewer than L distinct codewords
    Rational max_mean_topL;       // ARLR statistic
    Rational max_Lth_agreement;   // LR / ZELR statistic
    Matrix center_topL;           // argmax for max_mean_topL
    std::vector<std::uint64_t> topL_messages;
    Matrix center_Lth;            // argmax for max_Lth_agreement
    std::vector<std::uint64_t> above_messages; // codewords tied to that center
};
RecoveryAnalysis analyze_recovery(const Codebook& cb, std::uint32_t ell, std::uint64_t L,
                                  const CheckCaps& caps = {});

Verdict lr_verdict(const RecoveryAnalysis& a, const Rational& alpha);
Verdict arlr_verdict(const RecoveryAnalysis& a, const Rational& eps);
Verdict zelr_verdict(const RecoveryAnalysis& a);

Verdict check_list_recoverable(const Codebook& cb, const Rational& alpha, std::uint32_t ell,
                               std::uint64_t L, const CheckCaps& caps = {});

enum class SubsetMode { TopL, FullEnumeration };
Verdict check_avg_radius_list_recoverable(const Codebook& cb, const Rational& eps,
                                          std::uint32_t ell, std::uint64_t L,
                                          const CheckCaps& caps = {},
                                          SubsetMode mode = SubsetMode::TopL);
Verdict check_zero_error_lr(const Codebook& cb, std::uint32_t ell, std::uint64_t L,
                            const CheckCaps& caps = {});

// LinearCode conveniences.
Verdict check_list_decodable(const LinearCode& c, const Rational& rho, std::uint64_t L,
                             const CheckCaps& caps = {});
Verdict check_avg_radius_list_decodable(const LinearCode& c, const Rational& rho, std::uint64_t L,
                                        const CheckCaps& caps = {});
Verdict check_list_recoverable(const LinearCode& c, const Rational& alpha, std::uint32_t ell,
                               std::uint64_t L, const CheckCaps& caps = {});
Verdict check_avg_radius_list_recoverable(const LinearCode& c, const Rational& eps,
                                          std::uint32_t ell, std::uint64_t L,
                                          const CheckCaps& caps = {},
                                          SubsetMode mode = SubsetMode::TopL);
Verdict check_zero_error_lr(const LinearCode& c, std::uint32_t ell, std::uint64_t L,
                            const CheckCaps& caps = {});

// Witness-pair searches, the other side of the equivalences. Both factor the
// generator as G = X B (X of full column rank r = rank G, rows forming the
// witness X), scan centers ranking codewords through that factored form, and
// verify candidates with the plurality-based badness predicates.
struct AvgBadSearch {
    bool vacuous = false;
    std::size_t d = 0;                    // rank of G
    Rational best_mean_topL;              // max over candidate Lambda of sum_pl / n
    std::optional<WitnessPair> best_pair; // pair attaining it, cols(X) in C
};
AvgBadSearch search_average_bad(const LinearCode& c, std::uint32_t ell, std::uint64_t L,
                                const CheckCaps& caps = {});
// A verified (L, d, eps, ell)-average-bad pair with cols(X) in C and
// d <= d_max, or nullopt.
std::optional<WitnessPair> find_average_bad_witness(const LinearCode& c, const Rational& eps,
                                                    std::uint32_t ell, std::uint64_t L,
                                                    std::size_t d_max, const CheckCaps& caps = {});
std::optional<WitnessPair> find_average_bad_witness(const AvgBadSearch& s, const Rational& eps,
                                                    std::uint64_t L, std::uint32_t ell,
                                                    std::size_t d_max);

struct AllBadSearch {
    std::size_t d = 0;
    std::uint64_t max_rectangle_count = 0; // codewords inside the fullest rectangle
    std::optional<WitnessPair> pair_for_max;
};
AllBadSearch search_all_bad(const LinearCode& c, std::uint32_t ell, const CheckCaps& caps = {});
std::optional<WitnessPair> find_all_bad_witness(const LinearCode& c, std::uint32_t ell,
                                                std::uint64_t L, std::size_t d_max,
                                                const CheckCaps& caps = {});

// Oracle helper for tests: the exact maximum over all centers and all
// size->=L subsets Omega of the mean agreement, via full subset enumeration.
Rational max_mean_agreement_full_enum(const Codebook& cb, std::uint32_t ell, std::uint64_t L,
                                      const CheckCaps& caps = {});

} // namespace rlc

#endif
