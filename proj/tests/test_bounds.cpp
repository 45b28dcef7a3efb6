#include <doctest.h>

#include <cmath>

#include "rlc/bounds.hpp"

using namespace rlc;
using namespace rlc::bounds;

TEST_CASE("entropy values") {
    CHECK(entropy_q(0.5, 2) == doctest::Approx(1.0).epsilon(1e-12));
    for (double q : {2.0, 3.0, 4.0, 16.0, 1024.0})
        CHECK(entropy_q(1.0 - 1.0 / q, q) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy_q(0.0, 5) == 0.0);
    CHECK(entropy_q(1.0, 2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(entropy_q(-0.1, 2), Error);
    CHECK_THROWS_AS(entropy_q(0.5, 1.0), Error);
}

TEST_CASE("entropy is concave and maximized at 1 - 1/q") {
    for (double q : {2.0, 3.0, 9.0}) {
        double prev_diff = 1e9;
        for (double x = 0.05; x < 0.95; x += 0.05) {
            const double diff = entropy_q(x + 0.05, q) - entropy_q(x, q);
            CHECK(diff <= prev_diff + 1e-12); // increments shrink: concavity
            prev_diff = diff;
            CHECK(entropy_q(x, q) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("series around the uniform point matches direct evaluation") {
    // q = 2, x = 0.01, 10 terms: within 1e-9
    CHECK(entropy_expansion_around_uniform(0.01, 2, 10) ==
          doctest::Approx(entropy_q(0.5 - 0.01, 2)).epsilon(1e-9));
    CHECK(entropy_expansion_around_uniform(0.0, 5, 8) == doctest::Approx(1.0));

    // truncation error shrinks with the term count
    for (double q : {2.0, 4.0}) {
        for (double x : {0.02, 0.05}) {
            const double exact = entropy_q(1.0 - 1.0 / q - x, q);
            double prev = 1e9;
            for (unsigned terms : {2u, 5u, 10u, 20u}) {
                const double err = std::abs(entropy_expansion_around_uniform(x, q, terms) - exact);
                CHECK(err <= prev + 1e-15);
                prev = err;
            }
            CHECK(prev <= 1e-6);
        }
    }
    CHECK_THROWS_AS(entropy_expansion_around_uniform(0.6, 2, 5), Error);
}

TEST_CASE("large-q series matches direct evaluation") {
    CHECK(entropy_expansion_large_q(0.3, 16, 30) ==
          doctest::Approx(entropy_q(0.3, 16)).epsilon(1e-9));
    CHECK(entropy_expansion_large_q(0.3, 2, 60) ==
          doctest::Approx(entropy_q(0.3, 2)).epsilon(1e-9));
    // H_q(y) -> y as q grows, with gap at most H_2(y)/log2(q)
    for (double y : {0.1, 0.3, 0.7}) {
        for (double q : {16.0, 256.0, 65536.0}) {
            const double gap = entropy_q(y, q) - y;
            CHECK(gap <= entropy_q(y, 2) / std::log2(q) + 1e-12);
            CHECK(gap >= 0.0 - 1.0 / (q - 1)); // tail correction is small
        }
    }
}

TEST_CASE("hamming volume") {
    CHECK(hamming_volume(2, 3, Rational(1, 3)) == 4);
    CHECK(hamming_volume(5, 7, Rational(0)) == 1);
    CHECK(hamming_volume(3, 5, Rational(1)) == 243);
    CHECK(hamming_volume(2, 10, Rational(1, 2)) == BigInt(1 + 10 + 45 + 120 + 210 + 252));

    // (1/n) log_q Vol approaches H_q(rho)
    for (std::uint64_t q : {2ull, 4ull}) {
        for (double rho = 0.1; rho <= 1.0 - 1.0 / q + 1e-9; rho += 0.1) {
            const std::uint64_t n = 1000;
            const Rational rr(static_cast<std::uint64_t>(rho * 1000), 1000);
            const double lhs = log2_bigint(hamming_volume(q, n, rr)) /
                               (std::log2(static_cast<double>(q)) * n);
            CHECK(std::abs(lhs - entropy_q(rho, static_cast<double>(q))) < 0.01);
        }
    }
}

TEST_CASE("capacities") {
    CHECK(ld_capacity(2, 0.5) == doctest::Approx(0.0));
    CHECK(ld_capacity(2, 0.11) == doctest::Approx(0.5).epsilon(2e-3));
    // identity: ld_capacity + H_q = 1
    for (double q : {2.0, 3.0, 17.0})
        for (double rho : {0.1, 0.4, 0.7})
            CHECK(ld_capacity(q, rho) + entropy_q(rho, q) == doctest::Approx(1.0).epsilon(1e-12));
    // ell = 1 identity
    for (double q : {4.0, 8.0})
        for (double a : {0.3, 0.6, 0.9})
            CHECK(lr_capacity(q, 1, a) == doctest::Approx(ld_capacity(q, 1.0 - a)).epsilon(1e-12));
    CHECK_THROWS_AS(lr_capacity(4, 4, 0.5), Error);
}

TEST_CASE("average-radius rate bound") {
    RateBoundParams p;
    p.q = std::pow(2.0, 40);
    p.ell = 1;
    p.eps = 0.05;
    p.eta = 0.001;
    p.zeta = 0.04;
    p.xi = 0.001;
    REQUIRE(p.constraint_holds());
    auto r = thm_avgrad_rate(p);
    // small eps over a huge alphabet with nontrivial zeta: linear term binds
    CHECK(r.binding == BindingTerm::First);

    // q = 2 in the window where the entropy term stays below the linear one
    RateBoundParams p2;
    p2.q = 2;
    p2.ell = 1;
    p2.eps = 0.6;
    p2.eta = 0.001;
    p2.zeta = 0.01;
    p2.xi = 0.001;
    REQUIRE(p2.constraint_holds());
    auto r2 = thm_avgrad_rate(p2);
    CHECK(r2.binding == BindingTerm::Second);
    CHECK(r2.value <= 1.0);

    RateBoundParams bad = p;
    bad.eps = 0.001; // violates (1 - zeta)(eps - eta) > beta ell/q + mu_bar
    CHECK_THROWS_AS(thm_avgrad_rate(bad), Error);
}

TEST_CASE("average-radius list size monotonicity") {
    RateBoundParams p;
    p.q = 16;
    p.ell = 2;
    p.eps = 0.9;
    p.eta = 0.1;
    p.zeta = 0.5;
    p.xi = 0.01;
    const double base = thm_avgrad_list_size(p, 1.0);
    CHECK(base > 1.0);
    CHECK(std::isfinite(base));
    RateBoundParams smaller_xi = p;
    smaller_xi.xi = 0.005;
    CHECK(thm_avgrad_list_size(smaller_xi, 1.0) >= base);
    RateBoundParams smaller_zeta = p;
    smaller_zeta.zeta = 0.25;
    CHECK(thm_avgrad_list_size(smaller_zeta, 1.0) >= base);
    // regression log, not a ground-truth assertion
    MESSAGE("sample avgrad list size: ", base);
}

TEST_CASE("R0 forms") {
    // enormous q: simplified form applies and approaches (eps - ell/q)(1 - 6 zeta)
    auto r = cor_avgrad_R0(1e9, 1, 0.5, 0.01);
    CHECK(r.simplified_form);
    CHECK(r.value == doctest::Approx((0.5 - 1e-9) * 0.94).epsilon(1e-9));

    // small q: general form
    auto g = cor_avgrad_R0(2, 1, 0.6, 0.01);
    CHECK_FALSE(g.simplified_form);
    const double bump = std::min(2.0, 0.01 * std::log(3.0) / 0.99);
    CHECK(g.value == doctest::Approx((0.6 - 0.5 * (1 + bump)) * 0.95).epsilon(1e-12));

    // the min saturates at 2 for huge zeta-log combinations
    auto s = cor_avgrad_R0(2, 1, 0.9, 0.8);
    CHECK_FALSE(s.simplified_form);
    CHECK(s.value == doctest::Approx((0.9 - 0.5 * 3.0) * (1 - 5 * 0.8)).epsilon(1e-12));
}

TEST_CASE("constant-alphabet window") {
    auto w2 = cor_constantagr_window(2);
    CHECK(w2.first == doctest::Approx(0.51));
    CHECK(w2.second == doctest::Approx(0.8));
    auto w3 = cor_constantagr_window(3);
    CHECK(w3.first == doctest::Approx(1.0 / 3 + 1.0 / 9).epsilon(1e-12));
    auto w1000 = cor_constantagr_window(1000);
    CHECK(w1000.second == doctest::Approx(1.0 - 1.1 * std::log(1001.0) / 1000).epsilon(1e-9));
    CHECK(w1000.second > 0.99);
}

TEST_CASE("large-alphabet corollary") {
    // ell = 1 keeps the ell^(C/delta) lower bound trivial
    auto r = cor_largeq_check(1, 0.1, 0.01, 1e6, 1.0, 1.0);
    CHECK(r.q_ok);
    auto low = cor_largeq_check(2, 0.1, 0.01, 100.0, 1.0, 1.0);
    CHECK_FALSE(low.q_ok);
    // gamma = 0 recovers the exact capacity expression
    auto g0 = cor_largeq_check(2, 1e-12, 0.01, 1e6, 1.0, 1.0);
    const double cap = 1.0 - entropy_q(1.0 - 2.0 / 1e6 - 0.01, 1e6 / 2.0) -
                       std::log(2.0) / std::log(1e6);
    CHECK(g0.rate_bound == doctest::Approx(cap).epsilon(1e-9));

    // sandwich: 1 - H_{q/ell}(1 - ell/q - delta) lies within [C'''' delta, delta]
    // on the grid, with C'''' = 1/5
    for (double q : {1e5, 1e6}) {
        for (double delta : {0.002, 0.01}) {
            for (std::uint32_t ell : {1u, 2u}) {
                const double v = 1.0 - entropy_q(1.0 - ell / q - delta, q / ell);
                CHECK(v <= delta + 1e-12);
                CHECK(v >= 0.2 * delta);
            }
        }
    }
}

TEST_CASE("high-rate corollary") {
    auto r = cor_highratelr_check(0.1, 2, std::pow(2.0, 10.0 / 0.1), 1.0);
    CHECK(r.q_ok);
    CHECK(r.rate == doctest::Approx(0.9));
    CHECK(r.agreement == doctest::Approx(0.99));
    auto r3 = cor_highratelr_check(0.1, 3, std::pow(2.0, 10.0 / 0.1), 1.0);
    CHECK(r3.list_bound >= r.list_bound); // increasing in ell
    auto low = cor_highratelr_check(0.1, 2, 2.0, 1.0);
    CHECK_FALSE(low.q_ok);
}

TEST_CASE("zero-error theorem bounds") {
    auto r = thm_easy_bounds(16, 2, 0.1, 0.1);
    CHECK(r.rate_bound == doctest::Approx(0.65).epsilon(1e-12)); // min{0.7, 1 - 1/4 - 0.1}
    CHECK_FALSE(r.q_ok); // 16 < 2^20

    // ell = 1 with q above (3 ell)^(1/zeta - 1)
    auto r1 = thm_easy_bounds(128, 1, 0.19, 0.1);
    CHECK(r1.rate_bound == doctest::Approx(std::min(1 - 3 * 0.19, 1 - 0.1)).epsilon(1e-12));
    CHECK(r1.q_ok);

    auto alt = thm_easy_bounds(16, 2, 0.1, 0.1, /*alt_base=*/true);
    CHECK(alt.list_bound <= r.list_bound); // base q is smaller than 2 q ell / xi
}

TEST_CASE("rate curve") {
    std::vector<double> grid;
    for (double e = 0.51; e <= 0.801; e += 0.01) grid.push_back(e);
    auto pts = rate_curve(2, 1, 0.01, grid);
    REQUIRE(pts.size() == grid.size());
    for (const auto& pt : pts) {
        CHECK(pt.r == std::min(pt.r0, pt.r1));
        CHECK(pt.r1 < pt.r0); // the q = 2 window where the entropy term binds
        CHECK(pt.binding == BindingTerm::Second);
    }
    auto csv = rate_curve_csv(pts);
    CHECK(csv.substr(0, 22) == "eps,R0,R1,R,binding\n0.");

    CHECK_THROWS_AS(rate_curve(2, 1, 0.01, {0.3}), Error); // below ell/q
}
