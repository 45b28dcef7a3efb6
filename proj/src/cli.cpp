#include "rlc/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "rlc/bounds.hpp"
#include "rlc/experiment.hpp"
#include "rlc/serialize.hpp"

namespace rlc {

namespace {

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    if (const char* dir = std::getenv("RLC_OUT_DIR"); dir && *dir)
        return std::string(dir) + "/" + path;
    return path;
}

void emit(const std::string& out, const std::string& payload) {
    if (out.empty())
        std::cout << payload;
    else
        write_file(resolve_out(out), payload);
}

void emit_json(const std::string& out, const Json& j) { emit(out, j.dump(2) + "\n"); }

struct CliState {
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool assert_holds = false;
    int exit_code = 0;
};

FieldPtr make_field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus) {
    if (m == 1 && modulus.empty()) return Field::make(p);
    return Field::make(p, m, modulus);
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"finite-field workbench for list-decoding and list-recovery of random linear codes"};
    app.require_subcommand(1);
    app.fallthrough();
    CliState st;
    app.add_option("--out", st.out, "write output to this file (stdout when omitted)");
    app.add_option("--format", st.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", st.seed, "seed for sampling subcommands");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "sample and serialize a random linear code");
    struct {
        std::uint32_t p = 2, m = 1;
        std::vector<std::uint32_t> modulus;
        std::size_t n = 8;
        std::string R = "1/2";
    } g;
    gen->add_option("--p", g.p, "prime characteristic")->required();
    gen->add_option("--m", g.m, "extension degree");
    gen->add_option("--modulus", g.modulus, "modulus coefficients c0..cm");
    gen->add_option("--n", g.n, "block length")->required();
    gen->add_option("--R", g.R, "rate, R*n integral")->required();
    gen->callback([&] {
        FieldPtr f = make_field(g.p, g.m, g.modulus);
        Rng rng(st.seed);
        LinearCode c = sample_random_linear_code(f, g.n, parse_rational(g.R), rng);
        c.seed = st.seed;
        emit_json(st.out, code_to_json(c));
    });

    // ---- check ----
    auto* chk = app.add_subcommand("check", "run a property checker on a code file");
    struct {
        std::string property;
        std::string rho, eps, alpha;
        std::uint32_t ell = 1;
        std::uint64_t L = 2;
        std::string code_file;
        std::uint64_t cap = kDefaultEnumerationCap;
    } ck;
    chk->add_option("--property", ck.property, "LD | ARLD | LR | ARLR | ZELR")->required();
    chk->add_option("--rho", ck.rho, "disagreement radius (LD/ARLD)");
    chk->add_option("--eps", ck.eps, "agreement threshold (ARLR)");
    chk->add_option("--alpha", ck.alpha, "agreement threshold (LR)");
    chk->add_option("--ell", ck.ell, "input list size");
    chk->add_option("--L", ck.L, "output list size")->required();
    chk->add_option("--cap", ck.cap, "enumeration cap");
    chk->add_flag("--assert", st.assert_holds, "exit 1 when the property is violated");
    chk->add_option("code", ck.code_file, "code JSON file")->required();
    chk->callback([&] {
        const LinearCode c = code_from_json(Json::parse(read_file(ck.code_file)));
        CheckCaps caps{ck.cap, ck.cap};
        const Property prop = property_from_string(ck.property);
        auto threshold = [&](const std::string& s, const char* what) {
            if (s.empty()) fail(Errc::BadInput, std::string("missing ") + what);
            return parse_rational(s);
        };
        Verdict v;
        switch (prop) {
            case Property::LD:
                v = check_list_decodable(c, threshold(ck.rho, "--rho"), ck.L, caps);
                break;
            case Property::ARLD:
                v = check_avg_radius_list_decodable(c, threshold(ck.rho, "--rho"), ck.L, caps);
                break;
            case Property::LR:
                v = check_list_recoverable(c, threshold(ck.alpha, "--alpha"), ck.ell, ck.L, caps);
                break;
            case Property::ARLR:
                v = check_avg_radius_list_recoverable(c, threshold(ck.eps, "--eps"), ck.ell, ck.L,
                                                      caps);
                break;
            case Property::ZELR:
                v = check_zero_error_lr(c, ck.ell, ck.L, caps);
                break;
        }
        emit_json(st.out, verdict_to_json(v));
        if (st.assert_holds && !v.holds) st.exit_code = 1;
    });

    // ---- sigma ----
    auto* sg = app.add_subcommand("sigma", "sigma_p profile of a Lambda file");
    struct {
        std::string lambda_file;
        std::uint32_t pmax = 0; // 0: up to ambient dimension
        std::string mode = "exact";
        std::uint64_t samples = 100000;
        std::uint64_t cap = kDefaultTupleCap;
    } sgo;
    sg->add_option("lambda", sgo.lambda_file, "lambda JSON file")->required();
    sg->add_option("--pmax", sgo.pmax, "largest p (default: ambient dimension)");
    sg->add_option("--mode", sgo.mode, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
    sg->add_option("--samples", sgo.samples, "Monte Carlo sample count");
    sg->add_option("--cap", sgo.cap, "tuple enumeration cap");
    sg->callback([&] {
        const LambdaSet lambda = lambda_from_json(Json::parse(read_file(sgo.lambda_file)));
        const std::uint32_t pmax =
            sgo.pmax ? sgo.pmax : static_cast<std::uint32_t>(lambda.d());
        SigmaProfile prof;
        prof.lambda_size = lambda.size();
        prof.ambient_dim = lambda.d();
        if (sgo.mode == "exact") {
            const auto vals = sigma_exact_profile(lambda, pmax, sgo.cap);
            for (std::uint32_t p = 1; p <= pmax; ++p)
                prof.values.push_back({p, vals[p - 1], true, 0, 0.0});
        } else {
            Rng rng(st.seed);
            for (std::uint32_t p = 1; p <= pmax; ++p) {
                const auto est = sigma_mc(lambda, p, sgo.samples, rng);
                prof.values.push_back({p, est.mean, false, est.samples, est.std_error});
            }
        }
        emit_json(st.out, sigma_profile_to_json(prof));
    });

    // ---- extract ----
    auto* ex = app.add_subcommand("extract", "low-dimensional subset extraction from a Lambda file");
    struct {
        std::string lambda_file;
        std::string zeta = "1/5";
        std::uint32_t ell = 1;
        std::uint64_t cap = kDefaultTupleCap;
        std::uint64_t budget = kDefaultSubsetBudget;
    } exo;
    ex->add_option("lambda", exo.lambda_file, "lambda JSON file")->required();
    ex->add_option("--zeta", exo.zeta, "slack parameter, rational");
    ex->add_option("--ell", exo.ell, "input list size");
    ex->add_option("--cap", exo.cap, "tuple enumeration cap");
    ex->add_option("--budget", exo.budget, "subset search budget");
    ex->callback([&] {
        const LambdaSet lambda = lambda_from_json(Json::parse(read_file(exo.lambda_file)));
        const auto e = extract_low_dim_subset(lambda, lambda.d(), parse_rational(exo.zeta), exo.ell,
                                              exo.cap, exo.budget);
        emit_json(st.out, extraction_to_json(lambda, e));
    });

    // ---- bounds ----
    auto* bd = app.add_subcommand("bounds", "closed-form rate/list/entropy calculators");
    bd->require_subcommand(1);
    struct {
        double q = 2, x = 0.5, y = 0.5, alpha = 0.5, rho = 0.25;
        double eps = 0.5, eta = 0.01, zeta = 0.01, xi = 0.01;
        double gamma = 0.1, delta = 0.01, C = 1, Cp = 1;
        std::uint32_t ell = 1;
        unsigned terms = 20;
        std::uint64_t intq = 2, n = 10;
        std::string rho_str = "1/4";
        bool mu_bar_ellq = false;
        bool alt_base = false;
    } bo;

    auto* be = bd->add_subcommand("entropy", "H_q(x)");
    be->add_option("--q", bo.q)->required();
    be->add_option("--x", bo.x)->required();
    be->callback([&] { emit_json(st.out, Json{{"H", bounds::entropy_q(bo.x, bo.q)}}); });

    auto* bu = bd->add_subcommand("entropy-series-uniform", "series for H_q(1 - 1/q - x)");
    bu->add_option("--q", bo.q)->required();
    bu->add_option("--x", bo.x)->required();
    bu->add_option("--terms", bo.terms);
    bu->callback([&] {
        emit_json(st.out,
                  Json{{"H", bounds::entropy_expansion_around_uniform(bo.x, bo.q, bo.terms)}});
    });

    auto* bl = bd->add_subcommand("entropy-series-largeq", "series for H_q(y) about q = infinity");
    bl->add_option("--q", bo.q)->required();
    bl->add_option("--y", bo.y)->required();
    bl->add_option("--terms", bo.terms);
    bl->callback([&] {
        emit_json(st.out, Json{{"H", bounds::entropy_expansion_large_q(bo.y, bo.q, bo.terms)}});
    });

    auto* bv = bd->add_subcommand("volume", "Hamming ball volume, exact");
    bv->add_option("--q", bo.intq)->required();
    bv->add_option("--n", bo.n)->required();
    bv->add_option("--rho", bo.rho_str)->required();
    bv->callback([&] {
        const BigInt vol = bounds::hamming_volume(bo.intq, bo.n, parse_rational(bo.rho_str));
        emit_json(st.out, Json{{"volume", vol.str()}, {"log2", bounds::log2_bigint(vol)}});
    });

    auto* bc = bd->add_subcommand("ld-capacity", "1 - H_q(rho)");
    bc->add_option("--q", bo.q)->required();
    bc->add_option("--rho", bo.rho)->required();
    bc->callback([&] { emit_json(st.out, Json{{"R", bounds::ld_capacity(bo.q, bo.rho)}}); });

    auto* br = bd->add_subcommand("lr-capacity", "1 - H_{q/ell}(1-alpha) - log_q ell");
    br->add_option("--q", bo.q)->required();
    br->add_option("--ell", bo.ell)->required();
    br->add_option("--alpha", bo.alpha)->required();
    br->callback(
        [&] { emit_json(st.out, Json{{"R", bounds::lr_capacity(bo.q, bo.ell, bo.alpha)}}); });

    auto add_rate_params = [&](CLI::App* c) {
        c->add_option("--q", bo.q)->required();
        c->add_option("--ell", bo.ell);
        c->add_option("--eps", bo.eps)->required();
        c->add_option("--eta", bo.eta);
        c->add_option("--zeta", bo.zeta);
        c->add_option("--xi", bo.xi);
        c->add_flag("--mu-bar-ellq", bo.mu_bar_ellq, "use mu_bar = ell/q instead of 0");
    };

    auto* ba = bd->add_subcommand("avgrad-rate", "average-radius rate bound");
    add_rate_params(ba);
    ba->callback([&] {
        bounds::RateBoundParams p{bo.q, bo.ell, bo.eps, bo.eta, bo.zeta, bo.xi, !bo.mu_bar_ellq};
        const auto rb = bounds::thm_avgrad_rate(p);
        emit_json(st.out, Json{{"R", rb.value},
                               {"binding", rb.binding == bounds::BindingTerm::First ? "R0" : "R1"}});
    });

    auto* bL = bd->add_subcommand("avgrad-list", "average-radius list-size bound");
    add_rate_params(bL);
    bL->add_option("--C-prime", bo.Cp, "unspecified absolute constant (default 1)");
    bL->callback([&] {
        bounds::RateBoundParams p{bo.q, bo.ell, bo.eps, bo.eta, bo.zeta, bo.xi, !bo.mu_bar_ellq};
        emit_json(st.out, Json{{"L", bounds::thm_avgrad_list_size(p, bo.Cp)}});
    });

    auto* b0 = bd->add_subcommand("r0", "R_0 of the simplified average-radius statement");
    b0->add_option("--q", bo.q)->required();
    b0->add_option("--ell", bo.ell);
    b0->add_option("--eps", bo.eps)->required();
    b0->add_option("--zeta", bo.zeta);
    b0->callback([&] {
        const auto r = bounds::cor_avgrad_R0(bo.q, bo.ell, bo.eps, bo.zeta);
        emit_json(st.out, Json{{"R0", r.value}, {"simplified_form", r.simplified_form}});
    });

    auto* bw = bd->add_subcommand("constantagr", "agreement window (eps0, eps1)");
    bw->add_option("--q", bo.intq)->required();
    bw->callback([&] {
        const auto w = bounds::cor_constantagr_window(static_cast<std::uint32_t>(bo.intq));
        emit_json(st.out, Json{{"eps0", w.first}, {"eps1", w.second}});
    });

    auto* bq = bd->add_subcommand("largeq", "large-alphabet rate/list bounds");
    bq->add_option("--q", bo.q)->required();
    bq->add_option("--ell", bo.ell);
    bq->add_option("--gamma", bo.gamma)->required();
    bq->add_option("--delta", bo.delta)->required();
    bq->add_option("--C", bo.C);
    bq->add_option("--C-prime", bo.Cp);
    bq->callback([&] {
        const auto r = bounds::cor_largeq_check(bo.ell, bo.gamma, bo.delta, bo.q, bo.C, bo.Cp);
        emit_json(st.out,
                  Json{{"R", r.rate_bound}, {"L", r.list_bound}, {"q_ok", r.q_ok}});
    });

    auto* bh = bd->add_subcommand("highratelr", "high-rate list-recovery bounds");
    bh->add_option("--q", bo.q)->required();
    bh->add_option("--ell", bo.ell)->required();
    bh->add_option("--gamma", bo.gamma)->required();
    bh->add_option("--C", bo.C);
    bh->callback([&] {
        const auto r = bounds::cor_highratelr_check(bo.gamma, bo.ell, bo.q, bo.C);
        emit_json(st.out, Json{{"R", r.rate},
                               {"agreement", r.agreement},
                               {"L", r.list_bound},
                               {"q_ok", r.q_ok}});
    });

    auto* bz = bd->add_subcommand("easy", "zero-error rate/list bounds");
    bz->add_option("--q", bo.q)->required();
    bz->add_option("--ell", bo.ell)->required();
    bz->add_option("--zeta", bo.zeta)->required();
    bz->add_option("--xi", bo.xi)->required();
    bz->add_flag("--alt-base", bo.alt_base, "read the list exponential base as q");
    bz->callback([&] {
        const auto r = bounds::thm_easy_bounds(bo.q, bo.ell, bo.zeta, bo.xi, bo.alt_base);
        emit_json(st.out,
                  Json{{"R", r.rate_bound}, {"L", r.list_bound}, {"q_ok", r.q_ok}});
    });

    // ---- rates ----
    auto* rt = app.add_subcommand("rates", "rate-curve CSV: eps,R0,R1,R,binding");
    struct {
        double q = 2;
        std::uint32_t ell = 1;
        double zeta = 0.01;
        double eps_min = 0, eps_max = 0, eps_step = 0.01;
    } ro;
    rt->add_option("--q", ro.q)->required();
    rt->add_option("--ell", ro.ell);
    rt->add_option("--zeta", ro.zeta);
    rt->add_option("--eps-min", ro.eps_min, "default: ell/q + step");
    rt->add_option("--eps-max", ro.eps_max, "default: 1 - step");
    rt->add_option("--eps-step", ro.eps_step);
    rt->callback([&] {
        const double lo = ro.eps_min > 0 ? ro.eps_min : ro.ell / ro.q + ro.eps_step;
        const double hi = ro.eps_max > 0 ? ro.eps_max : 1.0 - ro.eps_step;
        std::vector<double> grid;
        for (double e = lo; e <= hi + 1e-12; e += ro.eps_step) grid.push_back(e);
        emit(st.out, bounds::rate_curve_csv(bounds::rate_curve(ro.q, ro.ell, ro.zeta, grid)));
    });

    // ---- experiment ----
    auto* xp = app.add_subcommand("experiment", "run a Monte Carlo experiment from a JSON config");
    struct {
        std::string config_file;
        bool compare_uniform = false;
    } xo;
    xp->add_option("config", xo.config_file, "experiment config JSON")->required();
    xp->add_flag("--compare-uniform", xo.compare_uniform,
                 "also run the uniformly-random baseline on the same trial seeds");
    xp->callback([&] {
        const ExperimentSpec spec = experiment_spec_from_json(Json::parse(read_file(xo.config_file)));
        if (xo.compare_uniform) {
            const PairedResult pr = compare_random_vs_linear(spec);
            Json j;
            j["linear"] = experiment_result_to_json(spec, pr.linear);
            j["uniform"] = experiment_result_to_json(spec, pr.uniform);
            emit_json(st.out, j);
        } else {
            emit_json(st.out, experiment_result_to_json(spec, run_experiment(spec)));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return st.exit_code;
}

} // namespace rlc
