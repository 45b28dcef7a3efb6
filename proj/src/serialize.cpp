#include "rlc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace rlc {

Json field_to_json(const Field& f) {
    Json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["modulus"] = f.modulus(); // empty for prime fields
    return j;
}

FieldPtr field_from_json(const Json& j) {
    const std::uint32_t p = j.at("p").get<std::uint32_t>();
    const std::uint32_t m = j.value("m", 1u);
    std::vector<std::uint32_t> modulus;
    if (j.contains("modulus")) modulus = j["modulus"].get<std::vector<std::uint32_t>>();
    return Field::make(p, m, std::move(modulus));
}

Json code_to_json(const LinearCode& c) {
    Json j;
    j["schema"] = kCodeSchema;
    j["field"] = field_to_json(*c.field);
    j["n"] = c.n;
    j["k"] = c.k;
    Json gen = Json::array();
    for (std::size_t r = 0; r < c.n; ++r) {
        Json row = Json::array();
        for (std::size_t col = 0; col < c.k; ++col) row.push_back(c.G.at(r, col));
        gen.push_back(std::move(row));
    }
    j["generator"] = std::move(gen);
    if (c.seed) j["seed"] = *c.seed;
    return j;
}

LinearCode code_from_json(const Json& j) {
    if (j.value("schema", "") != kCodeSchema) fail(Errc::BadInput, "not a code file");
    LinearCode c;
    c.field = field_from_json(j.at("field"));
    c.n = j.at("n").get<std::size_t>();
    c.k = j.at("k").get<std::size_t>();
    const auto& gen = j.at("generator");
    if (gen.size() != c.n) fail(Errc::BadInput, "generator row count != n");
    c.G = Matrix(c.field, c.n, c.k);
    for (std::size_t r = 0; r < c.n; ++r) {
        const auto& row = gen[r];
        if (row.size() != c.k) fail(Errc::BadInput, "generator column count != k");
        for (std::size_t col = 0; col < c.k; ++col) {
            const std::uint32_t v = row[col].get<std::uint32_t>();
            if (v >= c.field->q()) fail(Errc::BadInput, "generator entry out of field range");
            c.G.set(r, col, v);
        }
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    return c;
}

Json lambda_to_json(const LambdaSet& l) {
    Json j;
    j["schema"] = kLambdaSchema;
    j["field"] = field_to_json(*l.field());
    j["d"] = l.d();
    j["vectors"] = l.vectors();
    return j;
}

LambdaSet lambda_from_json(const Json& j) {
    if (j.value("schema", "") != kLambdaSchema) fail(Errc::BadInput, "not a lambda file");
    FieldPtr f = field_from_json(j.at("field"));
    const std::size_t d = j.at("d").get<std::size_t>();
    auto vectors = j.at("vectors").get<std::vector<std::vector<std::uint32_t>>>();
    return LambdaSet(std::move(f), d, std::move(vectors));
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["holds"] = v.holds;
    if (v.statistic)
        j["statistic"] = to_string(*v.statistic);
    else
        j["vacuous"] = true;
    if (!v.holds) {
        Json w;
        if (v.center) {
            Json rows = Json::array();
            for (std::size_t r = 0; r < v.center->rows(); ++r) {
                Json row = Json::array();
                for (std::size_t c = 0; c < v.center->cols(); ++c) row.push_back(v.center->at(r, c));
                rows.push_back(std::move(row));
            }
            w["center"] = std::move(rows);
        }
        w["offender_messages"] = v.offender_messages;
        j["witness"] = std::move(w);
    }
    return j;
}

Json sigma_profile_to_json(const SigmaProfile& p) {
    Json j;
    j["schema"] = "rlc-sigma/1";
    j["lambda_size"] = p.lambda_size;
    j["ambient_dim"] = p.ambient_dim;
    Json vals = Json::array();
    for (const auto& e : p.values) {
        Json v;
        v["p"] = e.p;
        v["sigma"] = to_string(e.value);
        v["mode"] = e.exact ? "exact" : "monte_carlo";
        v["samples"] = e.samples;
        v["std_error"] = e.std_error;
        vals.push_back(std::move(v));
    }
    j["values"] = std::move(vals);
    return j;
}

Json witness_pair_to_json(const WitnessPair& w) {
    Json j;
    j["d"] = w.d();
    j["X"] = w.X();
    j["lambda"] = w.lambda();
    return j;
}

Json extraction_to_json(const LambdaSet& lambda, const std::optional<Extraction>& e) {
    Json j;
    j["schema"] = "rlc-extract/1";
    j["good"] = !e.has_value();
    if (e) {
        j["violating_p"] = e->violating_p;
        j["mode"] = e->mode == SearchMode::Exhaustive ? "exhaustive" : "greedy";
        j["gamma_indices"] = e->gamma_indices;
        Json vecs = Json::array();
        for (std::size_t i : e->gamma_indices) vecs.push_back(lambda.vectors()[i]);
        j["gamma"] = std::move(vecs);
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::BadInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::BadInput, "cannot write " + path);
    out << contents;
}

} // namespace rlc
