#include "rlc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <thread>

namespace rlc {

Property property_from_string(const std::string& s) {
    if (s == "LD") return Property::LD;
    if (s == "ARLD") return Property::ARLD;
    if (s == "LR") return Property::LR;
    if (s == "ARLR") return Property::ARLR;
    if (s == "ZELR") return Property::ZELR;
    fail(Errc::BadInput, "unknown property '" + s + "'");
}

std::string property_to_string(Property p) {
    switch (p) {
        case Property::LD: return "LD";
        case Property::ARLD: return "ARLD";
        case Property::LR: return "LR";
        case Property::ARLR: return "ARLR";
        case Property::ZELR: return "ZELR";
    }
    return "?";
}

std::pair<double, double> wilson_interval(std::uint64_t x, std::uint64_t t) {
    if (t == 0) return {0.0, 1.0};
    const double z = 1.959963984540054; // 95%
    const double n = static_cast<double>(t);
    const double phat = static_cast<double>(x) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    const double lo = x == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = x == t ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

namespace {

// 0 pass, 1 fail, 2 checker error.
std::uint8_t run_trial(const ExperimentSpec& spec, std::uint64_t seed, bool uniform_baseline) {
    Rng rng(seed);
    try {
        Codebook cb;
        if (uniform_baseline) {
            const Rational kr = spec.R * Rational(spec.n);
            const std::size_t k = boost::multiprecision::numerator(kr).convert_to<std::size_t>();
            cb = codebook_of_words(spec.field, spec.n,
                                   sample_uniform_codebook(spec.field, spec.n, k, rng));
        } else {
            LinearCode c = sample_random_linear_code(spec.field, spec.n, spec.R, rng);
            if (spec.condition_on_full_rank) {
                for (int attempt = 0; attempt < 10000 && c.generator_rank() < c.k; ++attempt)
                    c = sample_random_linear_code(spec.field, spec.n, spec.R, rng);
                if (c.generator_rank() < c.k)
                    fail(Errc::BadInput, "could not draw a full-rank generator");
            }
            cb = codebook_of(c, spec.caps.codeword_cap);
        }
        Verdict v;
        switch (spec.property) {
            case Property::LD: v = check_list_decodable(cb, spec.threshold, spec.L, spec.caps); break;
            case Property::ARLD:
                v = check_avg_radius_list_decodable(cb, spec.threshold, spec.L, spec.caps);
                break;
            case Property::LR:
                v = check_list_recoverable(cb, spec.threshold, spec.ell, spec.L, spec.caps);
                break;
            case Property::ARLR:
                v = check_avg_radius_list_recoverable(cb, spec.threshold, spec.ell, spec.L, spec.caps);
                break;
            case Property::ZELR: v = check_zero_error_lr(cb, spec.ell, spec.L, spec.caps); break;
        }
        return v.holds ? 0 : 1;
    } catch (const Error&) {
        return 2;
    }
}

ExperimentResult run_impl(const ExperimentSpec& spec, bool uniform_baseline) {
    if (spec.trials < 1) fail(Errc::BadInput, "need trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentResult res;
    res.trials = spec.trials;
    res.per_trial_seeds.resize(spec.trials);
    res.per_trial_failed.assign(spec.trials, 0);
    for (std::uint64_t i = 0; i < spec.trials; ++i)
        res.per_trial_seeds[i] = trial_seed(spec.master_seed, i);

    const unsigned workers =
        std::max(1u, std::min<unsigned>(spec.parallelism, static_cast<unsigned>(spec.trials)));
    if (workers == 1) {
        for (std::uint64_t i = 0; i < spec.trials; ++i)
            res.per_trial_failed[i] = run_trial(spec, res.per_trial_seeds[i], uniform_baseline);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < spec.trials; i += workers)
                    res.per_trial_failed[i] = run_trial(spec, res.per_trial_seeds[i], uniform_baseline);
            });
        for (auto& t : pool) t.join();
    }

    for (std::uint8_t f : res.per_trial_failed) {
        res.failures += f == 1;
        res.errors += f == 2;
    }
    res.failure_rate = static_cast<double>(res.failures) / static_cast<double>(res.trials);
    std::tie(res.wilson_low, res.wilson_high) = wilson_interval(res.failures, res.trials);
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return res;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) { return run_impl(spec, false); }

PairedResult compare_random_vs_linear(const ExperimentSpec& spec) {
    PairedResult pr;
    pr.linear = run_impl(spec, false);
    pr.uniform = run_impl(spec, true);
    return pr;
}

Json experiment_spec_to_json(const ExperimentSpec& s) {
    Json j;
    j["schema"] = kExperimentSchema;
    j["field"] = field_to_json(*s.field);
    j["n"] = s.n;
    j["R"] = to_string(s.R);
    j["property"] = property_to_string(s.property);
    j["threshold"] = to_string(s.threshold);
    j["ell"] = s.ell;
    j["L"] = s.L;
    j["trials"] = s.trials;
    j["master_seed"] = s.master_seed;
    j["parallelism"] = s.parallelism;
    j["condition_on_full_rank"] = s.condition_on_full_rank;
    return j;
}

ExperimentSpec experiment_spec_from_json(const Json& j) {
    if (j.value("schema", "") != kExperimentSchema) fail(Errc::BadInput, "not an experiment config");
    ExperimentSpec s;
    s.field = field_from_json(j.at("field"));
    s.n = j.at("n").get<std::size_t>();
    s.R = parse_rational(j.at("R").get<std::string>());
    s.property = property_from_string(j.at("property").get<std::string>());
    if (j.contains("threshold")) s.threshold = parse_rational(j["threshold"].get<std::string>());
    s.ell = j.value("ell", 1u);
    s.L = j.at("L").get<std::uint64_t>();
    s.trials = j.at("trials").get<std::uint64_t>();
    s.master_seed = j.value("master_seed", 0ull);
    s.parallelism = j.value("parallelism", 1u);
    s.condition_on_full_rank = j.value("condition_on_full_rank", false);
    return s;
}

Json experiment_result_to_json(const ExperimentSpec& s, const ExperimentResult& r) {
    Json j;
    j["schema"] = kResultSchema;
    j["spec"] = experiment_spec_to_json(s);
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["errors"] = r.errors;
    j["failure_rate"] = r.failure_rate;
    j["wilson"] = {r.wilson_low, r.wilson_high};
    j["per_trial_seeds"] = r.per_trial_seeds;
    j["per_trial_failed"] = r.per_trial_failed;
    j["wall_ms"] = r.wall_ms;
    return j;
}

} // namespace rlc
