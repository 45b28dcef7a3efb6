#include <doctest.h>

#include <algorithm>

#include "rlc/checkers.hpp"
#include "rlc/rng.hpp"

using namespace rlc;

namespace {

LinearCode code_from_generator(const FieldPtr& f, std::vector<std::vector<std::uint32_t>> rows) {
    LinearCode c;
    c.field = f;
    c.n = rows.size();
    c.k = rows[0].size();
    c.G = Matrix::from_rows(f, rows);
    return c;
}

} // namespace

TEST_CASE("dist and dist_list") {
    auto f2 = Field::make(2);
    Vector y{f2, {0, 1, 1}};
    Vector z{f2, {0, 0, 1}};
    CHECK(dist(y, z) == Rational(1, 3));
    CHECK(dist(y, y) == Rational(0));
    Vector w{f2, {1, 0, 0}};
    CHECK(dist(y, w) == Rational(1));

    // ell = 1 list distance reduces to dist
    Matrix z1(f2, 1, 3);
    z1.set(0, 1, 0);
    z1.set(0, 2, 1);
    CHECK(dist_list(z1, y) == dist(y, Vector{f2, {0, 0, 1}}));

    // ell = q: distance 0 always
    auto f3 = Field::make(3);
    Matrix zq(f3, 3, 2);
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 2; ++j) zq.set(i, j, i);
    CHECK(dist_list(zq, Vector{f3, {2, 1}}) == Rational(0));

    CHECK_THROWS_AS((void)dist(y, Vector{f2, {0, 1}}), Error);
}

TEST_CASE("check_list_decodable basics") {
    auto f2 = Field::make(2);
    // C = all of F_2^2 (identity generator): balls of radius < 1/2 hold only
    // their center
    LinearCode full = code_from_generator(f2, {{1, 0}, {0, 1}});
    auto v = check_list_decodable(full, Rational(1, 2), 2);
    CHECK(v.holds);
    CHECK(*v.statistic == Rational(1));

    // L > q^k: vacuously fine even at rho = 1
    auto v2 = check_list_decodable(full, Rational(1), 5);
    CHECK(v2.holds);

    // rho = 0: empty strict ball
    auto v3 = check_list_decodable(full, Rational(0), 1);
    CHECK(v3.holds);
    CHECK(*v3.statistic == Rational(0));

    // failing case: repetition code, rho above half distance, L = 2
    LinearCode rep = code_from_generator(f2, {{1}, {1}, {1}});
    auto v4 = check_list_decodable(rep, Rational(1), 2);
    CHECK_FALSE(v4.holds);
    REQUIRE(v4.center.has_value());
    CHECK(v4.offender_messages.size() >= 2);
}

TEST_CASE("check_avg_radius_list_decodable basics") {
    auto f2 = Field::make(2);
    // C = {0}: any rho > 0 fails at z = 0 with L = 1
    LinearCode zero = code_from_generator(f2, {{0}, {0}});
    auto v = check_avg_radius_list_decodable(zero, Rational(1, 2), 1);
    CHECK_FALSE(v.holds);
    CHECK(*v.statistic == Rational(0));

    // average-radius implies plain list-decoding at the same (rho, L)
    Rng rng(40);
    for (int t = 0; t < 30; ++t) {
        LinearCode c = sample_random_linear_code(f2, 6, Rational(1, 3), rng);
        for (const auto rho : {Rational(1, 6), Rational(1, 3), Rational(1, 2)}) {
            for (std::uint64_t L = 1; L <= 3; ++L) {
                if (check_avg_radius_list_decodable(c, rho, L).holds)
                    CHECK(check_list_decodable(c, rho, L).holds);
            }
        }
    }
}

TEST_CASE("avg-radius LD verdict equals full subset enumeration") {
    Rng rng(41);
    auto f2 = Field::make(2);
    for (int t = 0; t < 15; ++t) {
        LinearCode c = sample_random_linear_code(f2, 6, Rational(1, 3), rng);
        Codebook cb = codebook_of(c);
        const std::uint64_t L = 2 + rng.below(2);
        if (cb.words.size() < L) continue;
        // oracle: min over z and over all subsets Omega of size exactly L of
        // the mean distance
        Rational best(2);
        std::vector<std::uint32_t> z(c.n, 0);
        for (std::uint64_t it = 0; it < 64; ++it) {
            std::vector<std::uint64_t> pick(L);
            for (std::size_t i = 0; i < L; ++i) pick[i] = i;
            for (;;) {
                std::uint64_t sum = 0;
                for (auto w : pick) {
                    std::uint64_t m = 0;
                    for (std::size_t j = 0; j < c.n; ++j) m += cb.words[w][j] != z[j];
                    sum += m;
                }
                best = std::min(best, Rational(sum, L * c.n));
                std::int64_t i = static_cast<std::int64_t>(L) - 1;
                while (i >= 0 && pick[i] == cb.words.size() - L + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (std::size_t j = i + 1; j < L; ++j) pick[j] = pick[j - 1] + 1;
            }
            for (std::size_t j = 0; j < c.n; ++j) {
                if (++z[j] < 2) break;
                z[j] = 0;
            }
        }
        auto v = check_avg_radius_list_decodable(c, Rational(1, 2), L);
        REQUIRE(v.statistic.has_value());
        CHECK(*v.statistic == best);
    }
}

TEST_CASE("list recovery: ell = 1 reduces to list decoding") {
    Rng rng(43);
    const std::vector<std::uint32_t> qs{2, 3};
    for (int t = 0; t < 30; ++t) {
        auto f = Field::make(qs[rng.below(2)]);
        LinearCode c = sample_random_linear_code(f, 4, Rational(1, 2), rng);
        for (const auto alpha : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            for (std::uint64_t L = 1; L <= 4; ++L) {
                // (alpha, 1, L)-LR  <=>  (1 - alpha, L)-LD
                auto lr = check_list_recoverable(c, alpha, 1, L);
                auto ld = check_list_decodable(c, Rational(1) - alpha, L);
                CHECK(lr.holds == ld.holds);
            }
        }
    }
}

TEST_CASE("zero-error list recovery") {
    auto f2 = Field::make(2);
    // repetition code, ell = 1, L = 2: at most one codeword agrees everywhere
    LinearCode rep = code_from_generator(f2, {{1}, {1}, {1}, {1}});
    auto v = check_zero_error_lr(rep, 1, 2);
    CHECK(v.holds);
    // a rectangle of size ell = 2 = q holds every codeword
    auto v2 = check_zero_error_lr(rep, 2, 2);
    CHECK_FALSE(v2.holds);
    // only q^k = 2 codewords exist, so L = 3 cannot be beaten
    CHECK(check_zero_error_lr(rep, 2, 3).holds);

    // alpha = 1 in check_list_recoverable means zero-error
    Rng rng(44);
    for (int t = 0; t < 20; ++t) {
        LinearCode c = sample_random_linear_code(f2, 5, Rational(2, 5), rng);
        for (std::uint64_t L = 1; L <= 4; ++L) {
            auto a = check_zero_error_lr(c, 1, L);
            auto b = check_list_recoverable(c, Rational(1), 1, L);
            CHECK(a.holds == b.holds);
        }
    }
}

TEST_CASE("avg-radius list recovery basics and hierarchy") {
    auto f3 = Field::make(3);
    Rng rng(45);
    for (int t = 0; t < 20; ++t) {
        LinearCode c = sample_random_linear_code(f3, 4, Rational(1, 2), rng);
        // eps = 1 always holds
        CHECK(check_avg_radius_list_recoverable(c, Rational(1), 2, 2).holds);
        for (const auto eps : {Rational(1, 2), Rational(2, 3), Rational(5, 6)}) {
            for (std::uint64_t L = 1; L <= 3; ++L) {
                for (std::uint32_t ell = 1; ell <= 2; ++ell) {
                    // ARLR implies LR at the same parameters
                    if (check_avg_radius_list_recoverable(c, eps, ell, L).holds)
                        CHECK(check_list_recoverable(c, eps, ell, L).holds);
                }
                // ARLR(eps, 1, L) implies ARLD(1 - eps, L)
                if (check_avg_radius_list_recoverable(c, eps, 1, L).holds)
                    CHECK(check_avg_radius_list_decodable(c, Rational(1) - eps, L).holds);
            }
        }
    }
}

TEST_CASE("top-L reduction equals full subset enumeration (ARLR)") {
    Rng rng(46);
    auto f2 = Field::make(2);
    for (int t = 0; t < 10; ++t) {
        LinearCode c = sample_random_linear_code(f2, 4, Rational(1, 2), rng);
        Codebook cb = codebook_of(c);
        for (std::uint64_t L = 2; L <= 3; ++L) {
            if (cb.words.size() < L) continue;
            RecoveryAnalysis a = analyze_recovery(cb, 1, L);
            CHECK(a.max_mean_topL == max_mean_agreement_full_enum(cb, 1, L));
            // the two check entry points agree
            for (const auto eps : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
                auto v1 = check_avg_radius_list_recoverable(cb, eps, 1, L);
                auto v2 = check_avg_radius_list_recoverable(cb, eps, 1, L, CheckCaps{},
                                                            SubsetMode::FullEnumeration);
                CHECK(v1.holds == v2.holds);
                CHECK(*v1.statistic == *v2.statistic);
            }
        }
    }
}

TEST_CASE("witness pairs: average-bad search matches the checker") {
    Rng rng(47);
    const std::vector<std::uint32_t> qs{2, 3};
    for (int t = 0; t < 40; ++t) {
        auto f = Field::make(qs[rng.below(2)]);
        LinearCode c = sample_random_linear_code(f, 4, Rational(1, 2), rng);
        const std::uint32_t ell = 1 + static_cast<std::uint32_t>(rng.below(f->q() - 1));
        const std::uint64_t L = 2 + rng.below(2);
        auto verdict = check_avg_radius_list_recoverable(c, Rational(2, 5), ell, L);
        auto witness = find_average_bad_witness(c, Rational(2, 5), ell, L, c.k);
        if (verdict.statistic.has_value())
            CHECK(verdict.holds == !witness.has_value());
        if (witness) {
            CHECK(is_average_bad(*witness, L, witness->d(), Rational(2, 5), ell));
            CHECK(contains_cols(c, witness->X()));
        }
    }
}

TEST_CASE("witness pairs: all-bad search matches zero-error checker") {
    Rng rng(48);
    const std::vector<std::uint32_t> qs{2, 3};
    for (int t = 0; t < 40; ++t) {
        auto f = Field::make(qs[rng.below(2)]);
        LinearCode c = sample_random_linear_code(f, 4, Rational(1, 2), rng);
        const std::uint32_t ell = 1 + static_cast<std::uint32_t>(rng.below(f->q() - 1));
        for (std::uint64_t L = 1; L <= 4; ++L) {
            auto verdict = check_zero_error_lr(c, ell, L);
            auto witness = find_all_bad_witness(c, ell, L, c.k);
            CHECK(verdict.holds == !witness.has_value());
            if (witness) {
                CHECK(is_all_bad(*witness, L, witness->d(), ell));
                CHECK(contains_cols(c, witness->X()));
            }
        }
        CHECK_FALSE(find_all_bad_witness(c, ell, 2, 0).has_value()); // d_max = 0
    }
}

TEST_CASE("boundary behavior follows the stated inequalities") {
    auto f2 = Field::make(2);
    // two codewords 000, 111: at z = 001 distances are 1/3 and 2/3
    LinearCode rep = code_from_generator(f2, {{1}, {1}, {1}});
    // LD counts dist < rho strictly: at rho = 1/3 the ball around 000 holds
    // only 000 itself
    auto v = check_list_decodable(rep, Rational(1, 3), 2);
    CHECK(v.holds);
    CHECK(*v.statistic == Rational(1));
    // at rho = 2/3 each ball still holds one codeword (the other row of the
    // table sits at distance >= 2/3 from every center)
    auto v2 = check_list_decodable(rep, Rational(2, 3), 2);
    CHECK(v2.holds);
    // at rho = 1 the center 001 sees both codewords strictly inside
    auto v3 = check_list_decodable(rep, Rational(1), 2);
    CHECK_FALSE(v3.holds);

    // ARLD: mean of the two distances from z = 000 is 1/2; holds iff >= rho
    auto a1 = check_avg_radius_list_decodable(rep, Rational(1, 2), 2);
    CHECK(a1.holds); // exactly at the boundary: mean 1/2 >= 1/2
    auto a2 = check_avg_radius_list_decodable(rep, Rational(1, 2) + Rational(1, 100), 2);
    CHECK_FALSE(a2.holds);

    // ARLR boundary: statistic <= eps counts as holding
    Codebook cb = codebook_of(rep);
    RecoveryAnalysis an = analyze_recovery(cb, 1, 2);
    auto at = arlr_verdict(an, an.max_mean_topL);
    CHECK(at.holds);
    auto below = arlr_verdict(an, an.max_mean_topL - Rational(1, 1000));
    CHECK_FALSE(below.holds);
}

TEST_CASE("uniform codebook baseline plumbing") {
    auto f2 = Field::make(2);
    Rng rng(50);
    auto words = sample_uniform_codebook(f2, 5, 3, rng);
    CHECK(words.size() == 8);
    Codebook cb = codebook_of_words(f2, 5, words);
    CHECK(cb.words.size() <= 8);
    CHECK(std::is_sorted(cb.message_index.begin(), cb.message_index.end()));
    auto v = check_list_decodable(cb, Rational(1, 5), 2);
    CHECK(v.statistic.has_value());
}
