#ifndef RLC_CODES_HPP
#define RLC_CODES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rlc/fqla.hpp"
#include "rlc/rational.hpp"
#include "rlc/rng.hpp"

namespace rlc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 20;

// Rate-R linear code over F_q given by an n x k generator matrix G; the code
// is { G v : v in F_q^k }. G's rows are the x_j of the witness-pair picture.
struct LinearCode {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix G; // n x k
    std::optional<std::uint64_t> seed;

    Rational rate() const { return Rational(k, n); }
    std::size_t generator_rank() const { return rank(G); }
};

// Samples G with every row independent and uniform over F_q^k. R*n must be an
// exact integer k in [1, n]; rank-deficient samples are kept as drawn.
LinearCode sample_random_linear_code(const FieldPtr& f, std::size_t n, const Rational& R, Rng& rng);

// Uniform words, the completely-random baseline: q^k iid samples from F_q^n
// (a multiset; duplicates possible).
std::vector<std::vector<std::uint32_t>> sample_uniform_codebook(const FieldPtr& f, std::size_t n,
                                                                std::size_t k, Rng& rng);

// c = G v.
Vector encode(const LinearCode& c, const Vector& v);

// All q^k codewords G v in index order of v. With dedupe, duplicates arising
// from a rank-deficient G are removed (order of first appearance).
std::vector<std::vector<std::uint32_t>> enumerate_codewords(const LinearCode& c,
                                                            bool dedupe = false,
                                                            std::uint64_t cap = kDefaultEnumerationCap);

// Relative minimum distance: min over nonzero messages of wt(Gv)/n. Zero when
// two distinct messages encode identically.
Rational min_distance(const LinearCode& c, std::uint64_t cap = kDefaultEnumerationCap);

// Column view of a list of n row vectors in F^d: the d vectors in F^n.
std::vector<std::vector<std::uint32_t>> cols(const std::vector<std::vector<std::uint32_t>>& x_rows);

// True iff every column of the matrix with rows X is a codeword of c, decided
// by membership in the column space of G.
bool contains_cols(const LinearCode& c, const std::vector<std::vector<std::uint32_t>>& x_rows);

// Message index <-> message vector in the canonical base-q digit order used
// by enumerate_codewords.
std::vector<std::uint32_t> message_of_index(const Field& f, std::size_t k, std::uint64_t index);

} // namespace rlc

#endif
