#include "rlc/codes.hpp"

#include <algorithm>
#include <set>

namespace rlc {

LinearCode sample_random_linear_code(const FieldPtr& f, std::size_t n, const Rational& R, Rng& rng) {
    if (n == 0) fail(Errc::BadInput, "block length must be positive");
    const Rational kr = R * Rational(n);
    if (boost::multiprecision::denominator(kr) != 1)
        fail(Errc::InvalidRate, "R*n is not an integer");
    const BigInt kb = boost::multiprecision::numerator(kr);
    if (kb < 1 || kb > BigInt(n)) fail(Errc::InvalidRate, "need 1 <= R*n <= n");
    const std::size_t k = kb.convert_to<std::size_t>();

    LinearCode c;
    c.field = f;
    c.n = n;
    c.k = k;
    c.G = Matrix(f, n, k);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < k; ++j)
            c.G.set(r, j, static_cast<std::uint32_t>(rng.below(f->q())));
    return c;
}

std::vector<std::vector<std::uint32_t>> sample_uniform_codebook(const FieldPtr& f, std::size_t n,
                                                                std::size_t k, Rng& rng) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= f->q();
        if (count > kDefaultEnumerationCap) fail(Errc::EnumerationTooLarge, "q^k exceeds cap");
    }
    std::vector<std::vector<std::uint32_t>> words(count, std::vector<std::uint32_t>(n));
    for (auto& w : words)
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::uint32_t>(rng.below(f->q()));
    return words;
}

Vector encode(const LinearCode& c, const Vector& v) { return mat_vec(c.G, v); }

std::vector<std::uint32_t> message_of_index(const Field& f, std::size_t k, std::uint64_t index) {
    std::vector<std::uint32_t> v(k);
    for (std::size_t i = 0; i < k; ++i) {
        v[i] = static_cast<std::uint32_t>(index % f.q());
        index /= f.q();
    }
    return v;
}

namespace {

std::uint64_t codeword_count_checked(const LinearCode& c, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k; ++i) {
        total *= c.field->q();
        if (total > cap) fail(Errc::EnumerationTooLarge, "q^k exceeds enumeration cap");
    }
    return total;
}

} // namespace

std::vector<std::vector<std::uint32_t>> enumerate_codewords(const LinearCode& c, bool dedupe,
                                                            std::uint64_t cap) {
    const std::uint64_t total = codeword_count_checked(c, cap);
    const Field& f = *c.field;
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(total);
    std::vector<std::uint32_t> msg(c.k, 0);
    std::vector<std::uint32_t> word(c.n, 0);
    // Incremental: index order over messages, recomputing the product per
    // message (n*k small at enumeration scales).
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (std::size_t r = 0; r < c.n; ++r) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < c.k; ++j) acc = f.add(acc, f.mul(c.G.at(r, j), msg[j]));
            word[r] = acc;
        }
        out.push_back(word);
        // increment base-q counter
        for (std::size_t j = 0; j < c.k; ++j) {
            if (++msg[j] < f.q()) break;
            msg[j] = 0;
        }
    }
    if (dedupe) {
        std::set<std::vector<std::uint32_t>> seen;
        std::vector<std::vector<std::uint32_t>> unique;
        for (auto& w : out)
            if (seen.insert(w).second) unique.push_back(std::move(w));
        out = std::move(unique);
    }
    return out;
}

Rational min_distance(const LinearCode& c, std::uint64_t cap) {
    const std::uint64_t total = codeword_count_checked(c, cap);
    const Field& f = *c.field;
    std::size_t best = c.n + 1;
    std::vector<std::uint32_t> msg(c.k, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        for (std::size_t j = 0; j < c.k; ++j) {
            if (++msg[j] < f.q()) break;
            msg[j] = 0;
        }
        std::size_t w = 0;
        for (std::size_t r = 0; r < c.n && w < best; ++r) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < c.k; ++j) acc = f.add(acc, f.mul(c.G.at(r, j), msg[j]));
            if (acc != 0) ++w;
        }
        best = std::min(best, w);
        if (best == 0) break;
    }
    if (best > c.n) best = c.n; // k=0 style degenerate guard; unreachable for k >= 1
    return Rational(best, c.n);
}

std::vector<std::vector<std::uint32_t>> cols(const std::vector<std::vector<std::uint32_t>>& x_rows) {
    if (x_rows.empty()) return {};
    const std::size_t d = x_rows[0].size();
    std::vector<std::vector<std::uint32_t>> out(d, std::vector<std::uint32_t>(x_rows.size()));
    for (std::size_t i = 0; i < x_rows.size(); ++i) {
        if (x_rows[i].size() != d) fail(Errc::DimensionMismatch, "ragged row list");
        for (std::size_t j = 0; j < d; ++j) out[j][i] = x_rows[i][j];
    }
    return out;
}

bool contains_cols(const LinearCode& c, const std::vector<std::vector<std::uint32_t>>& x_rows) {
    for (const auto& row : x_rows)
        if (row.size() != x_rows[0].size()) fail(Errc::DimensionMismatch, "ragged row list");
    if (!x_rows.empty() && x_rows[0].size() == 0) return true;
    // Membership in the column space of G, tested column by column.
    SpanTester span(c.G.transposed());
    for (auto& column : cols(x_rows)) {
        if (column.size() != c.n) fail(Errc::DimensionMismatch, "column length != n");
        if (!span.contains(Vector{c.field, column})) return false;
    }
    return true;
}

} // namespace rlc
