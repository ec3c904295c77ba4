#include "qchan/json_io.hpp"

#include <string>

#include "json_detail.hpp"

namespace qchan {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw DomainError(std::string(what) + ": malformed JSON");
    }
    return j;
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError("expected a [re, im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Vec2 vec2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw DomainError("expected a 2-vector of [re, im] pairs");
    }
    return Vec2{complex_from_json(j[0]), complex_from_json(j[1])};
}

ComplexMatrix matrix2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw DomainError("expected a 2x2 array of [re, im] pairs");
    }
    ComplexMatrix m(2);
    for (std::size_t r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2) {
            throw DomainError("expected a 2x2 array of [re, im] pairs");
        }
        for (std::size_t c = 0; c < 2; ++c) m.at(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

double require_param(const json& params, const char* name) {
    if (!params.contains(name) || !params[name].is_number()) {
        throw DomainError(std::string("preset parameter '") + name + "' missing or non-numeric");
    }
    return params[name].get<double>();
}

KrausChannel preset_from_json(const json& spec) {
    if (!spec.contains("name") || !spec["name"].is_string()) {
        throw DomainError("preset spec needs a \"name\" string");
    }
    const std::string name = spec["name"].get<std::string>();
    const json params = spec.value("params", json::object());
    if (name == "bit_flip") return KrausChannel::bit_flip(require_param(params, "p"));
    if (name == "phase_damping") return KrausChannel::phase_damping(require_param(params, "lambda"));
    if (name == "rotation") return KrausChannel::rotation(require_param(params, "alpha"));
    if (name == "pauli_x") return KrausChannel::pauli_x();
    if (name == "identity") return KrausChannel::identity();
    throw DomainError("unknown preset '" + name + "'");
}

const char* measure_name(Measure measure) {
    return measure == Measure::RelativeEntropy ? "rel" : "l1";
}

}  // namespace

QubitBasis parse_basis_json(const std::string& text) {
    const json j = parse_or_throw(text, "parse_basis_json");
    if (j.contains("bloch")) {
        const json& angles = j["bloch"];
        if (!angles.is_array() || angles.size() != 2) {
            throw DomainError("parse_basis_json: \"bloch\" must be [theta, phi]");
        }
        return QubitBasis::from_bloch(angles[0].get<double>(), angles[1].get<double>());
    }
    if (j.contains("vectors")) {
        const json& vectors = j["vectors"];
        if (!vectors.is_array() || vectors.size() != 2) {
            throw DomainError("parse_basis_json: \"vectors\" must hold two 2-vectors");
        }
        return QubitBasis::from_vectors(vec2_from_json(vectors[0]), vec2_from_json(vectors[1]));
    }
    throw DomainError("parse_basis_json: expected a \"bloch\" or \"vectors\" key");
}

KrausChannel parse_channel_json(const std::string& text) {
    const json j = parse_or_throw(text, "parse_channel_json");
    if (j.contains("preset")) return preset_from_json(j["preset"]);
    if (j.contains("kraus")) {
        const json& ops = j["kraus"];
        if (!ops.is_array() || ops.empty()) {
            throw DomainError("parse_channel_json: \"kraus\" must be a nonempty operator list");
        }
        std::vector<ComplexMatrix> operators;
        for (const json& op : ops) operators.push_back(matrix2_from_json(op));
        return validate_cptp(std::move(operators));
    }
    throw DomainError("parse_channel_json: expected a \"preset\" or \"kraus\" key");
}

std::string basis_to_json(const QubitBasis& basis) {
    return detail::basis_to_json_obj(basis).dump();
}

std::string coherence_to_json(const CoherenceValue& value) {
    json j;
    j["measure"] = measure_name(value.measure);
    j["value"] = value.value;
    if (value.diag_entropy) j["diag_entropy"] = *value.diag_entropy;
    if (value.state_entropy) j["state_entropy"] = *value.state_entropy;
    j["basis"] = detail::basis_to_json_obj(value.basis);
    return j.dump();
}

std::string report_to_json(const UncertaintyReport& report) {
    json j;
    j["measure"] = measure_name(report.measure);
    j["sum_coherence"] = report.sum_coherence;
    j["lower_bound"] = report.lower_bound;
    j["slack"] = report.slack;
    j["c_max_used"] = report.c_max_used;
    j["saturated"] = report.saturated;
    return j.dump();
}

std::string verification_to_json(const VerificationReport& report) {
    json j;
    j["target"] = target_name(report.target);
    j["trials"] = report.trials;
    j["master_seed"] = report.master_seed;
    j["min_slack"] = report.min_slack;
    json violations = json::array();
    for (const Violation& v : report.violations) {
        violations.push_back({{"trial", v.trial},
                              {"slack", v.slack},
                              {"inputs", json::parse(v.inputs)}});
    }
    j["violations"] = violations;
    json near = json::array();
    for (const NearSaturation& n : report.near_saturation) {
        near.push_back({{"trial", n.trial}, {"slack", n.slack}, {"inputs", json::parse(n.inputs)}});
    }
    j["near_saturation"] = near;
    return j.dump();
}

}  // namespace qchan
