#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "crystal_poly/cartan.hpp"
#include "crystal_poly/crystal_z.hpp"
#include "crystal_poly/linear_form.hpp"

namespace cli {

struct Config {
  crystal_poly::AffineType type;
  std::vector<int> word;  // position 1 first
  crystal_poly::WeightSpec lambda;
};

/// Reads {family, n, iota_word, lambda}. iota_word is "2 1 3" or [2,1,3];
/// lambda is {"k": mult, ...}, "infinity", or absent (infinity).
Config load_config(const std::string& path);
Config parse_config(const nlohmann::json& j);

nlohmann::json form_json(const crystal_poly::LinearForm& f, const crystal_poly::AdaptedSequence& seq);

}  // namespace cli
