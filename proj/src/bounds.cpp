#include "rlc/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rlc {
namespace bounds {

namespace {
double xlog(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }
} // namespace

double entropy_q(double x, double q) {
    if (!(q > 1)) fail(Errc::DomainError, "entropy_q needs q > 1");
    if (x < 0 || x > 1) fail(Errc::DomainError, "entropy_q needs x in [0,1]");
    const double lnq = std::log(q);
    return x * std::log(q - 1) / lnq - (xlog(x) + xlog(1 - x)) / lnq;
}

double entropy_expansion_around_uniform(double x, double q, unsigned terms) {
    if (!(q > 1)) fail(Errc::DomainError, "needs q > 1");
    if (std::abs(x) * q / (q - 1) >= 1)
        fail(Errc::DomainError, "outside the convergence radius |x| q/(q-1) < 1");
    const double lnq = std::log(q);
    double acc = 1.0;
    double xp = x; // x^j carried across terms; term j uses x^(j+1)
    double sgn = -1.0;
    double ratio = -1.0 / (q - 1);
    double ratio_pow = ratio;
    double qj = q;
    for (unsigned j = 1; j <= terms; ++j) {
        xp *= x; // x^(j+1)
        acc += sgn / (static_cast<double>(j) * (j + 1)) * (1.0 - ratio_pow) * (qj / lnq) * xp;
        sgn = -sgn;
        ratio_pow *= ratio;
        qj *= q;
    }
    return acc;
}

double entropy_expansion_large_q(double y, double q, unsigned terms) {
    if (!(q > 1)) fail(Errc::DomainError, "needs q > 1");
    if (!(y > 0 && y < 1)) fail(Errc::DomainError, "needs 0 < y < 1");
    const double h2 = entropy_q(y, 2.0);
    double tail = 0.0, qpow = 1.0;
    for (unsigned j = 1; j <= terms; ++j) {
        qpow *= q;
        tail += 1.0 / (static_cast<double>(j) * qpow);
    }
    return y + h2 / std::log2(q) - y * tail / std::log(q);
}

BigInt hamming_volume(std::uint64_t q, std::uint64_t n, const Rational& rho) {
    if (q < 1) fail(Errc::DomainError, "q must be >= 1");
    if (rho < 0 || rho > 1) fail(Errc::DomainError, "rho must lie in [0,1]");
    const Rational rn = rho * Rational(n);
    const BigInt radius = boost::multiprecision::numerator(rn) / boost::multiprecision::denominator(rn);
    BigInt acc = 0, binom = 1, qm1 = BigInt(q) - 1, pw = 1;
    for (std::uint64_t i = 0;; ++i) {
        acc += binom * pw;
        if (BigInt(i) >= radius || i >= n) break;
        binom = binom * (n - i) / (i + 1);
        pw *= qm1;
    }
    return acc;
}

double log2_bigint(const BigInt& v) {
    if (v <= 0) fail(Errc::DomainError, "log of a nonpositive integer");
    const std::size_t bits = boost::multiprecision::msb(v); // index of the top bit
    if (bits <= 62) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (bits - 62);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

double ld_capacity(double q, double rho) { return 1.0 - entropy_q(rho, q); }

double lr_capacity(double q, std::uint32_t ell, double alpha) {
    if (!(q / ell > 1)) fail(Errc::DomainError, "needs q/ell > 1");
    return 1.0 - entropy_q(1.0 - alpha, q / ell) - std::log(static_cast<double>(ell)) / std::log(q);
}

double RateBoundParams::beta() const {
    return mu_bar_zero ? std::pow(q + 1.0, zeta / (2.0 * (1.0 - zeta))) : 2.0;
}

bool RateBoundParams::constraint_holds() const {
    return (1.0 - zeta) * (eps - eta) > beta() * ell / q + mu_bar() && zeta <= 0.05;
}

RateBound thm_avgrad_rate(const RateBoundParams& p) {
    if (!p.constraint_holds()) fail(Errc::ConstraintViolated, "rate-bound constraint fails");
    const double first = (p.eps - p.beta() * p.ell / p.q - p.mu_bar()) * (1.0 - 5.0 * p.zeta) - p.eta;
    const double second =
        1.0 - entropy_q(1.0 - p.eps + p.eta, p.q / p.ell) - std::log(p.ell) / std::log(p.q) - p.xi;
    if (first <= second) return {first, BindingTerm::First};
    return {second, BindingTerm::Second};
}

double thm_avgrad_list_size(const RateBoundParams& p, double c_prime) {
    if (!(p.eps > p.eta && p.eta > 0 && p.zeta > 0 && p.xi > 0 && p.ell >= 1))
        fail(Errc::DomainError, "list-size parameters out of range");
    const double lg = std::log(p.ell * p.zeta / p.xi);
    double log_l = std::log((1.0 - p.eps + p.eta) / p.eta);
    log_l += (c_prime * lg / p.zeta) * std::log(p.q * p.ell / p.xi);
    log_l += (c_prime * lg * lg / (p.zeta * p.zeta * p.zeta)) * std::log(1.0 / (p.eps - p.eta));
    if (log_l > std::log(std::numeric_limits<double>::max()))
        return std::numeric_limits<double>::infinity();
    return std::exp(log_l);
}

R0Result cor_avgrad_R0(double q, std::uint32_t ell, double eps, double zeta) {
    if (!(eps > 0 && eps <= 1 && zeta > 0 && zeta < 1))
        fail(Errc::DomainError, "R0 parameters out of range");
    const double t = 2.0 * ell / ((1.0 - zeta) * eps);
    const bool simplified = q >= t * std::log(t);
    if (simplified) return {(eps - ell / q) * (1.0 - 6.0 * zeta), true};
    const double bump = std::min(2.0, zeta * std::log(q + 1.0) / (1.0 - zeta));
    return {(eps - (ell / q) * (1.0 + bump)) * (1.0 - 5.0 * zeta), false};
}

std::pair<double, double> cor_constantagr_window(std::uint32_t q) {
    if (q == 2) return {0.51, 0.8};
    const double eps0 = 1.0 / q + 1.0 / (static_cast<double>(q) * q);
    const double eps1 = std::max(0.8, 1.0 - 1.1 * std::log(q + 1.0) / q);
    return {eps0, eps1};
}

LargeQResult cor_largeq_check(std::uint32_t ell, double gamma, double delta, double q, double C,
                              double c_prime) {
    if (!(delta > 0 && gamma > 0 && gamma < 1)) fail(Errc::DomainError, "need delta, gamma > 0");
    LargeQResult r;
    const double lower1 = C * (ell / delta) * (ell / delta);
    const double lower2 = std::pow(static_cast<double>(ell), C / delta);
    r.q_ok = q >= std::max(lower1, lower2);
    r.rate_bound = (1.0 - entropy_q(1.0 - ell / q - delta, q / ell) -
                    std::log(static_cast<double>(ell)) / std::log(q)) *
                   (1.0 - gamma);
    const double lg = std::log(ell / delta);
    const double log_list = c_prime * lg * lg * std::log(q);
    r.list_bound = log_list > std::log(std::numeric_limits<double>::max())
                       ? std::numeric_limits<double>::infinity()
                       : std::exp(log_list);
    return r;
}

HighRateResult cor_highratelr_check(double gamma, std::uint32_t ell, double q, double C) {
    if (!(gamma > 0 && gamma < 1 && ell > 1)) fail(Errc::DomainError, "need gamma in (0,1), ell > 1");
    HighRateResult r;
    r.rate = 1.0 - gamma;
    r.agreement = 1.0 - gamma / 10.0;
    r.q_ok = q >= std::pow(static_cast<double>(ell), C / gamma);
    const double lnl = std::log(static_cast<double>(ell));
    const double log_list =
        (lnl / gamma) * std::log(q * ell / gamma) + lnl * lnl / (gamma * gamma * gamma);
    r.list_bound = log_list > std::log(std::numeric_limits<double>::max())
                       ? std::numeric_limits<double>::infinity()
                       : std::exp(log_list);
    return r;
}

EasyBounds thm_easy_bounds(double q, std::uint32_t ell, double zeta, double xi, bool alt_base) {
    if (!(zeta > 0 && zeta < 0.2 && xi > 0)) fail(Errc::DomainError, "need zeta in (0,1/5), xi > 0");
    EasyBounds r;
    r.q_ok = q >= std::max(std::pow(static_cast<double>(ell), 2.0 / zeta),
                           std::pow(3.0 * ell, 1.0 / zeta - 1.0));
    r.rate_bound = std::min(1.0 - 3.0 * zeta, 1.0 - std::log(ell) / std::log(q) - xi);
    const double base = alt_base ? q : 2.0 * q * ell / xi;
    const double log_list = (2.0 * std::log(2.0 * ell / xi) / zeta) * std::log(base) +
                            std::log(static_cast<double>(ell));
    const double exp_part = log_list > std::log(std::numeric_limits<double>::max())
                                ? std::numeric_limits<double>::infinity()
                                : std::exp(log_list);
    r.list_bound = std::max(2.0 * ell / zeta, exp_part);
    return r;
}

std::vector<RateCurvePoint> rate_curve(double q, std::uint32_t ell, double zeta,
                                       const std::vector<double>& eps_grid) {
    std::vector<RateCurvePoint> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps > ell / q && eps < 1))
            fail(Errc::DomainError, "grid point outside (ell/q, 1)");
        RateCurvePoint pt;
        pt.eps = eps;
        pt.r0 = cor_avgrad_R0(q, ell, eps, zeta).value;
        pt.r1 = 1.0 - entropy_q(1.0 - eps, q / ell) - std::log(ell) / std::log(q);
        if (pt.r0 <= pt.r1) {
            pt.r = pt.r0;
            pt.binding = BindingTerm::First;
        } else {
            pt.r = pt.r1;
            pt.binding = BindingTerm::Second;
        }
        out.push_back(pt);
    }
    return out;
}

std::string rate_curve_csv(const std::vector<RateCurvePoint>& points) {
    std::ostringstream os;
    os << "eps,R0,R1,R,binding\n";
    os.precision(12);
    for (const auto& p : points)
        os << p.eps << ',' << p.r0 << ',' << p.r1 << ',' << p.r << ','
           << (p.binding == BindingTerm::First ? "R0" : "R1") << '\n';
    return os.str();
}

} // namespace bounds
} // namespace rlc
