#ifndef RLC_BOUNDS_HPP
#define RLC_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rlc/rational.hpp"

namespace rlc {
namespace bounds {

// Real-valued calculators (64-bit doubles, identity checks documented at
// 1e-9 relative tolerance). Volumes are exact big integers.

// q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with
// the 0 log 0 = 0 convention. Defined for real q > 1 and x in [0,1].
double entropy_q(double x, double q);

// Series for H_q(1 - 1/q - x) about x = 0:
// 1 + sum_{j>=1} ((-1)^j / (j(j+1))) (1 - (-1/(q-1))^j) (q^j / ln q) x^(j+1).
// Converges for |x| q/(q-1) < 1.
double entropy_expansion_around_uniform(double x, double q, unsigned terms);

// Series for H_q(y) about q = infinity:
// y + H_2(y)/log2(q) - (y/ln q) sum_{j>=1} q^(-j)/j.
double entropy_expansion_large_q(double y, double q, unsigned terms);

// Vol_q^n(rho) = sum_{i=0}^{floor(rho n)} C(n,i) (q-1)^i, exact.
BigInt hamming_volume(std::uint64_t q, std::uint64_t n, const Rational& rho);

// log2 of a positive big integer, good to ~1e-12 relative error.
double log2_bigint(const BigInt& v);

// List-decoding capacity 1 - H_q(rho) and list-recovery capacity
// 1 - H_{q/ell}(1 - alpha) - log_q(ell).
double ld_capacity(double q, double rho);
double lr_capacity(double q, std::uint32_t ell, double alpha);

// Parameters of the average-radius rate/list-size bounds. mu_bar is the
// centering switch: 0 or ell/q; beta is derived from it.
struct RateBoundParams {
    double q = 2;
    std::uint32_t ell = 1;
    double eps = 0.5;
    double eta = 0.01;
    double zeta = 0.01;
    double xi = 0.01;
    bool mu_bar_zero = true; // mu_bar = 0 when true, ell/q otherwise

    double mu_bar() const { return mu_bar_zero ? 0.0 : static_cast<double>(ell) / q; }
    double beta() const;
    // (1 - zeta)(eps - eta) > beta ell/q + mu_bar  and  zeta <= 1/20
    bool constraint_holds() const;
};

enum class BindingTerm { First, Second };

struct RateBound {
    double value;
    BindingTerm binding;
};

// min{ (eps - beta ell/q - mu_bar)(1 - 5 zeta) - eta,
//      1 - H_{q/ell}(1 - eps + eta) - log_q ell - xi }.
RateBound thm_avgrad_rate(const RateBoundParams& p);

// ((1 - eps + eta)/eta) * (q ell / xi)^(C' log(ell zeta / xi) / zeta)
//   * (1/(eps - eta))^(C' log^2(ell zeta / xi) / zeta^3),
// computed in log space; +inf when it overflows a double.
double thm_avgrad_list_size(const RateBoundParams& p, double c_prime);

struct R0Result {
    double value;
    bool simplified_form; // true when q >= (2 ell/((1-zeta) eps)) ln(... )
};

// R_0 for the simplified average-radius statement: the general form
// (eps - (ell/q)(1 + min{2, zeta ln(q+1)/(1-zeta)}))(1 - 5 zeta), replaced by
// (eps - ell/q)(1 - 6 zeta) once q clears the stated threshold.
R0Result cor_avgrad_R0(double q, std::uint32_t ell, double eps, double zeta);

// Agreement window (eps0, eps1) for constant alphabets; (0.51, 0.8) at q = 2,
// otherwise (1/q + 1/q^2, max{0.8, 1 - 1.1 ln(q+1)/q}).
std::pair<double, double> cor_constantagr_window(std::uint32_t q);

struct LargeQResult {
    double rate_bound;
    double list_bound;
    bool q_ok; // q >= max{ C (ell/delta)^2, ell^(C/delta) }
};
LargeQResult cor_largeq_check(std::uint32_t ell, double gamma, double delta, double q, double C,
                              double c_prime);

struct HighRateResult {
    double rate;       // 1 - gamma
    double agreement;  // 1 - gamma/10
    double list_bound; // (q ell / gamma)^(ln(ell)/gamma) exp(ln^2(ell)/gamma^3)
    bool q_ok;         // q >= ell^(C/gamma)
};
HighRateResult cor_highratelr_check(double gamma, std::uint32_t ell, double q, double C);

struct EasyBounds {
    double rate_bound; // min{1 - 3 zeta, 1 - log_q(ell) - xi}
    double list_bound; // max{2 ell/zeta, ell (2 q ell/xi)^(2 ln(2 ell/xi)/zeta)}
    bool q_ok;         // q >= max{ ell^(2/zeta), (3 ell)^(1/zeta - 1) }
};
// alt_base reads the list-size exponential base as q instead of 2 q ell / xi
// (the stated base; the source's notation is ambiguous).
EasyBounds thm_easy_bounds(double q, std::uint32_t ell, double zeta, double xi,
                           bool alt_base = false);

struct RateCurvePoint {
    double eps;
    double r0;
    double r1; // 1 - H_{q/ell}(1 - eps) - log_q(ell)
    double r;  // min(r0, r1)
    BindingTerm binding;
};

// The rate curve with eta = xi = 0: per epsilon, R0 from cor_avgrad_R0 and
// the capacity-style term R1; grid points must lie in (ell/q, 1).
std::vector<RateCurvePoint> rate_curve(double q, std::uint32_t ell, double zeta,
                                       const std::vector<double>& eps_grid);

// CSV rendering with header "eps,R0,R1,R,binding".
std::string rate_curve_csv(const std::vector<RateCurvePoint>& points);

} // namespace bounds
} // namespace rlc

#endif
