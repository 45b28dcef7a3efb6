#ifndef RLC_TEST_UTIL_HPP
#define RLC_TEST_UTIL_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "rlc/galois.hpp"
#include "rlc/rng.hpp"

namespace rlc::testutil {

// Field of a prime-power order.
inline FieldPtr field_of_q(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t m = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1) break; // not a power of the smallest prime factor
        return m == 1 ? Field::make(p) : Field::make(p, m);
    }
    fail(Errc::BadInput, "not a prime power");
}

// `count` distinct random vectors in F_q^d; count is clamped to q^d.
inline std::vector<std::vector<std::uint32_t>> distinct_vectors(Rng& rng, const FieldPtr& f,
                                                                std::size_t d, std::size_t count) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < d && space <= count; ++i) space *= f->q();
    count = std::min<std::uint64_t>(count, space);
    std::set<std::vector<std::uint32_t>> seen;
    while (seen.size() < count) {
        std::vector<std::uint32_t> v(d);
        for (auto& c : v) c = static_cast<std::uint32_t>(rng.below(f->q()));
        seen.insert(std::move(v));
    }
    return {seen.begin(), seen.end()};
}

} // namespace rlc::testutil

#endif
