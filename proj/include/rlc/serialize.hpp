#ifndef RLC_SERIALIZE_HPP
#define RLC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "rlc/checkers.hpp"
#include "rlc/codes.hpp"
#include "rlc/galois.hpp"
#include "rlc/sigma.hpp"

namespace rlc {

using Json = nlohmann::json;

// All file formats carry a "schema" tag. Round trips are bit-exact.
inline constexpr const char* kCodeSchema = "rlc-code/1";
inline constexpr const char* kLambdaSchema = "rlc-lambda/1";
inline constexpr const char* kExperimentSchema = "rlc-experiment/1";
inline constexpr const char* kResultSchema = "rlc-experiment-result/1";

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

Json lambda_to_json(const LambdaSet& l);
LambdaSet lambda_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

Json sigma_profile_to_json(const SigmaProfile& p);

Json witness_pair_to_json(const WitnessPair& w);

Json extraction_to_json(const LambdaSet& lambda, const std::optional<Extraction>& e);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace rlc

#endif
