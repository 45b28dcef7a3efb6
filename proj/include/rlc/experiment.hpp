#ifndef RLC_EXPERIMENT_HPP
#define RLC_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rlc/checkers.hpp"
#include "rlc/serialize.hpp"

namespace rlc {

enum class Property { LD, ARLD, LR, ARLR, ZELR };

Property property_from_string(const std::string& s);
std::string property_to_string(Property p);

// A seeded Monte Carlo experiment: sample `trials` independent random linear
// codes and measure how often the selected property fails. Trial i uses the
// derived seed trial_seed(master_seed, i), so the sample stream is identical
// for any parallelism level.
struct ExperimentSpec {
    FieldPtr field;
    std::size_t n = 4;
    Rational R = Rational(1, 2);
    Property property = Property::LD;
    Rational threshold = Rational(1, 4); // rho for LD/ARLD, alpha/eps for LR/ARLR
    std::uint32_t ell = 1;               // recovery checks only
    std::uint64_t L = 2;
    std::uint64_t trials = 10;
    std::uint64_t master_seed = 0;
    unsigned parallelism = 1;
    bool condition_on_full_rank = false;
    CheckCaps caps;
};

struct ExperimentResult {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t errors = 0; // trials whose checker raised; recorded, not fatal
    double failure_rate = 0;
    double wilson_low = 0, wilson_high = 0;
    std::vector<std::uint64_t> per_trial_seeds;
    std::vector<std::uint8_t> per_trial_failed; // 1 fail, 0 pass, 2 error
    double wall_ms = 0;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

// Paired comparison on common trial seeds: the same property checked on
// (i) random linear codes and (ii) deduplicated multisets of q^k iid uniform
// words.
struct PairedResult {
    ExperimentResult linear;
    ExperimentResult uniform;
};
PairedResult compare_random_vs_linear(const ExperimentSpec& spec);

// 95% Wilson score interval for x successes out of t.
std::pair<double, double> wilson_interval(std::uint64_t x, std::uint64_t t);

Json experiment_spec_to_json(const ExperimentSpec& s);
ExperimentSpec experiment_spec_from_json(const Json& j);
Json experiment_result_to_json(const ExperimentSpec& s, const ExperimentResult& r);

} // namespace rlc

#endif
