#pragma once

#include <nlohmann/json_fwd.hpp>

#include "sleib/algebra.hpp"

namespace sleib {

/// JSON form of a parameter vector: {"dim": 5, "beta": ["1", "0"], "gamma": "3"}
/// with scalars in the canonical text grammar.
ParamVector params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const ParamVector& p);

/// Display form "L(1,0,3)"; the dimension is the entry count plus two.
ParamVector parse_point(const std::string& text);

/// Accepts either the display form or a path to a JSON file.
ParamVector load_point(const std::string& arg);

}  // namespace sleib
