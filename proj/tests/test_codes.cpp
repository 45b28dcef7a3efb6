#include <doctest.h>

#include <algorithm>
#include <set>

#include "rlc/codes.hpp"

using namespace rlc;

TEST_CASE("sampling shape and determinism") {
    auto f2 = Field::make(2);
    Rng a(42), b(42);
    LinearCode c1 = sample_random_linear_code(f2, 4, Rational(1, 2), a);
    LinearCode c2 = sample_random_linear_code(f2, 4, Rational(1, 2), b);
    CHECK(c1.k == 2);
    CHECK(c1.G == c2.G);

    auto f3 = Field::make(3);
    Rng r(9);
    LinearCode c3 = sample_random_linear_code(f3, 6, Rational(1, 3), r);
    CHECK(c3.k == 2);
    CHECK(c3.rate() == Rational(1, 3));

    Rng r2(9);
    CHECK_THROWS_AS(sample_random_linear_code(f2, 2, Rational(1, 4), r2), Error);
    try {
        sample_random_linear_code(f2, 2, Rational(1, 4), r2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidRate);
    }
    CHECK_THROWS_AS(sample_random_linear_code(f2, 3, Rational(0), r2), Error);
}

TEST_CASE("encode basics") {
    auto f2 = Field::make(2);
    LinearCode id;
    id.field = f2;
    id.n = 3;
    id.k = 3;
    id.G = Matrix(f2, 3, 3);
    for (int i = 0; i < 3; ++i) id.G.set(i, i, 1);
    Vector v{f2, {1, 0, 1}};
    CHECK(encode(id, v).coords == v.coords);
    Vector zero{f2, {0, 0, 0}};
    CHECK(encode(id, zero).coords == zero.coords);

    LinearCode rep;
    rep.field = f2;
    rep.n = 3;
    rep.k = 1;
    rep.G = Matrix::from_rows(f2, {{1}, {1}, {1}});
    CHECK(encode(rep, Vector{f2, {1}}).coords == std::vector<std::uint32_t>{1, 1, 1});

    CHECK_THROWS_AS(encode(rep, Vector{f2, {1, 0}}), Error);
}

TEST_CASE("encode is linear") {
    auto f4 = Field::make(2, 2);
    Rng rng(5);
    LinearCode c = sample_random_linear_code(f4, 5, Rational(2, 5), rng);
    for (int t = 0; t < 40; ++t) {
        Vector u{f4, {}}, v{f4, {}};
        for (std::size_t i = 0; i < c.k; ++i) {
            u.coords.push_back(static_cast<std::uint32_t>(rng.below(4)));
            v.coords.push_back(static_cast<std::uint32_t>(rng.below(4)));
        }
        Vector sum{f4, {}};
        for (std::size_t i = 0; i < c.k; ++i) sum.coords.push_back(f4->add(u.coords[i], v.coords[i]));
        auto eu = encode(c, u), ev = encode(c, v), es = encode(c, sum);
        for (std::size_t i = 0; i < c.n; ++i)
            CHECK(es.coords[i] == f4->add(eu.coords[i], ev.coords[i]));
    }
}

TEST_CASE("enumerate_codewords") {
    auto f2 = Field::make(2);
    LinearCode zero;
    zero.field = f2;
    zero.n = 3;
    zero.k = 2;
    zero.G = Matrix(f2, 3, 2); // all-zero generator
    auto words = enumerate_codewords(zero);
    CHECK(words.size() == 4);
    for (const auto& w : words) CHECK(w == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(enumerate_codewords(zero, /*dedupe=*/true).size() == 1);

    auto f3 = Field::make(3);
    Rng rng(3);
    LinearCode c = sample_random_linear_code(f3, 4, Rational(3, 4), rng);
    CHECK(enumerate_codewords(c).size() == 27);

    CHECK_THROWS_AS(enumerate_codewords(c, false, 10), Error);
}

TEST_CASE("min_distance examples and brute-force oracle") {
    auto f2 = Field::make(2);
    LinearCode rep;
    rep.field = f2;
    rep.n = 3;
    rep.k = 1;
    rep.G = Matrix::from_rows(f2, {{1}, {1}, {1}});
    CHECK(min_distance(rep) == Rational(1));

    LinearCode id;
    id.field = f2;
    id.n = 4;
    id.k = 4;
    id.G = Matrix(f2, 4, 4);
    for (int i = 0; i < 4; ++i) id.G.set(i, i, 1);
    CHECK(min_distance(id) == Rational(1, 4));

    // pairwise brute force on random codes
    Rng rng(77);
    for (int t = 0; t < 20; ++t) {
        LinearCode c = sample_random_linear_code(f2, 10, Rational(3, 10), rng);
        auto words = enumerate_codewords(c);
        Rational best(1);
        bool repeat = false;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                std::size_t dd = 0;
                for (std::size_t a = 0; a < c.n; ++a) dd += words[i][a] != words[j][a];
                if (dd == 0) repeat = true;
                best = std::min(best, Rational(dd, c.n));
            }
        if (repeat) CHECK(min_distance(c) == 0);
        CHECK(min_distance(c) == best);
    }
}

TEST_CASE("cols and contains_cols") {
    auto f2 = Field::make(2);
    // X = rows of the 3x3 identity: columns are the standard basis of F^3
    auto cset = cols({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(cset.size() == 3);
    CHECK(cset[0] == std::vector<std::uint32_t>{1, 0, 0});

    CHECK(cols({{1, 0, 1}}).size() == 3); // single row: d singletons

    Rng rng(13);
    auto f3 = Field::make(3);
    for (int t = 0; t < 30; ++t) {
        LinearCode c = sample_random_linear_code(f3, 5, Rational(2, 5), rng);
        // columns of G itself are codewords: X = rows of G (d = k)
        std::vector<std::vector<std::uint32_t>> xr;
        for (std::size_t i = 0; i < c.n; ++i) xr.push_back(c.G.row(i).coords);
        CHECK(contains_cols(c, xr));

        // random X: verify against the enumeration oracle
        std::vector<std::vector<std::uint32_t>> xrand;
        for (std::size_t i = 0; i < c.n; ++i) {
            std::vector<std::uint32_t> row(2);
            for (auto& e : row) e = static_cast<std::uint32_t>(rng.below(3));
            xrand.push_back(row);
        }
        auto words = enumerate_codewords(c);
        std::set<std::vector<std::uint32_t>> wordset(words.begin(), words.end());
        bool expected = true;
        for (auto& col : cols(xrand)) expected = expected && wordset.count(col) > 0;
        CHECK(contains_cols(c, xrand) == expected);
    }
}

TEST_CASE("full-rank sampling frequency, loose bound") {
    auto f2 = Field::make(2);
    Rng rng(2024);
    const std::size_t n = 10, k = 4;
    int full = 0;
    const int trials = 2000;
    for (int t = 0; t < trials; ++t) {
        LinearCode c = sample_random_linear_code(f2, n, Rational(k, n), rng);
        full += c.generator_rank() == k;
    }
    const double bound = 1.0 - 2.0 * std::pow(2.0, -static_cast<double>(n - k));
    CHECK(static_cast<double>(full) / trials >= bound);
}

TEST_CASE("message_of_index round trip") {
    auto f3 = Field::make(3);
    CHECK(message_of_index(*f3, 3, 0) == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(message_of_index(*f3, 3, 5) == std::vector<std::uint32_t>{2, 1, 0});
    CHECK(message_of_index(*f3, 3, 26) == std::vector<std::uint32_t>{2, 2, 2});
}
