#pragma once

// Internal nlohmann builders shared by json_io.cpp and verify.cpp. Complex
// numbers are [re, im] pairs; 2x2 operators are 2x2 arrays of such pairs.

#include <json.hpp>

#include "qchan/basis.hpp"
#include "qchan/channel.hpp"

namespace qchan::detail {

inline nlohmann::json complex_to_json(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json vec2_to_json(const Vec2& v) {
    return nlohmann::json::array({complex_to_json(v[0]), complex_to_json(v[1])});
}

inline nlohmann::json matrix2_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < 2; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < 2; ++c) row.push_back(complex_to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json basis_to_json_obj(const QubitBasis& basis) {
    nlohmann::json j;
    if (basis.bloch()) {
        j["bloch"] = nlohmann::json::array({basis.bloch()->theta, basis.bloch()->phi});
    }
    j["vectors"] = nlohmann::json::array({vec2_to_json(basis.first()), vec2_to_json(basis.second())});
    return j;
}

inline nlohmann::json channel_to_json_obj(const KrausChannel& channel) {
    nlohmann::json ops = nlohmann::json::array();
    for (const ComplexMatrix& op : channel.operators()) ops.push_back(matrix2_to_json(op));
    return nlohmann::json{{"kraus", ops}};
}

}  // namespace qchan::detail
