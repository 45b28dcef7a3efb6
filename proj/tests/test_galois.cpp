#include <doctest.h>

#include <set>

#include "rlc/galois.hpp"
#include "rlc/rng.hpp"

using namespace rlc;

namespace {

// Prime powers <= 64, the exhaustive-check table.
const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1},
    {29, 1}, {31, 1}, {37, 1}, {41, 1}, {43, 1}, {47, 1}, {53, 1}, {59, 1}, {61, 1},
    {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

} // namespace

TEST_CASE("field construction basics") {
    auto f5 = Field::make(5);
    CHECK(f5->q() == 5);
    CHECK(f5->modulus().empty());

    auto f4 = Field::make(2, 2, {1, 1, 1}); // x^2 + x + 1
    CHECK(f4->q() == 4);

    CHECK_THROWS_AS(Field::make(4), Error);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), Error); // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(Field::make(2, 17), Error);           // 2^17 > 2^16
    try {
        Field::make(2, 2, {1, 0, 1});
        FAIL("expected ReducibleModulus");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ReducibleModulus);
    }
    try {
        Field::make(6);
        FAIL("expected NonPrimeCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonPrimeCharacteristic);
    }
    try {
        Field::make(2, 20);
        FAIL("expected FieldTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldTooLarge);
    }
}

TEST_CASE("default modulus is deterministic and F4 matches the unique choice") {
    auto a = Field::make(2, 2);
    auto b = Field::make(2, 2);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("arithmetic examples") {
    auto f5 = Field::make(5);
    CHECK(f5->mul(2, 3) == 1);
    CHECK(f5->inv(2) == 3);
    CHECK(f5->add(3, 4) == 2);
    CHECK(f5->neg(2) == 3);

    // F_4 with x^2 + x + 1: the element x has index 2, and x*x = x + 1.
    auto f4 = Field::make(2, 2, {1, 1, 1});
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->add(2, 3) == 1);

    CHECK_THROWS_AS((void)f5->inv(0), Error);
    CHECK_THROWS_AS((void)f5->pow(0, -1), Error);
}

TEST_CASE("element wrapper checks field identity") {
    auto f5 = Field::make(5);
    auto f7 = Field::make(7);
    Element a(f5, 2), b(f5, 4);
    CHECK((a * b).index() == 3);
    CHECK((a + b).index() == 1);
    Element c(f7, 2);
    CHECK_THROWS_AS((void)(a + c), Error);
    CHECK((-a).index() == 3);
    CHECK(a.inverse().index() == 3);
}

TEST_CASE("enumerate_elements") {
    auto f2 = Field::make(2);
    CHECK(f2->elements() == std::vector<std::uint32_t>{0, 1});
    auto f4 = Field::make(2, 2);
    auto e4 = f4->elements();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0] == 0);
    CHECK(e4[1] == 1);
    auto f9 = Field::make(3, 2);
    CHECK(f9->elements().size() == 9);
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (auto [p, m] : kSmallFields) {
        std::uint32_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) q *= p;
        if (q > 16) continue;
        auto f = Field::make(p, m);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("every small field: inverses and multiplicative order, exhaustive") {
    for (auto [p, m] : kSmallFields) {
        auto f = Field::make(p, m);
        const std::uint32_t q = f->q();
        std::set<std::uint32_t> seen;
        for (std::uint32_t a = 1; a < q; ++a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, q - 1) == 1);
            seen.insert(f->inv(a));
        }
        CHECK(seen.size() == q - 1); // inversion is a bijection on nonzero elements
    }
}

TEST_CASE("randomized axioms for larger fields") {
    for (auto spec : {std::pair<std::uint32_t, std::uint32_t>{2, 8},
                      {2, 12}, {3, 5}, {5, 4}, {251, 1}, {2, 16}, {431, 1}}) {
        auto f = Field::make(spec.first, spec.second);
        Rng rng(7 + f->q());
        for (int t = 0; t < 300; ++t) {
            const std::uint32_t a = static_cast<std::uint32_t>(rng.below(f->q()));
            const std::uint32_t b = static_cast<std::uint32_t>(rng.below(f->q()));
            const std::uint32_t c = static_cast<std::uint32_t>(rng.below(f->q()));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            if (a != 0) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->pow(a, f->q() - 1) == 1);
            }
        }
    }
}
