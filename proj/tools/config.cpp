#include "config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cli {

using nlohmann::json;

Config parse_config(const json& j) {
  Config c;
  c.type.family = crystal_poly::parse_family(j.at("family").get<std::string>());
  c.type.n = j.at("n").get<int>();
  crystal_poly::validate(c.type);
  const auto& w = j.at("iota_word");
  if (w.is_string()) {
    std::istringstream in(w.get<std::string>());
    int v;
    while (in >> v) c.word.push_back(v);
    if (!in.eof()) throw std::invalid_argument("iota_word: expected integers separated by spaces");
  } else {
    c.word = w.get<std::vector<int>>();
  }
  c.lambda = crystal_poly::WeightSpec::inf(c.type.n);
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    const auto& l = j["lambda"];
    if (l.is_string()) {
      if (l.get<std::string>() != "infinity") throw std::invalid_argument("lambda: expected an object or \"infinity\"");
    } else {
      c.lambda = crystal_poly::WeightSpec::zero(c.type.n);
      for (auto it = l.begin(); it != l.end(); ++it) {
        int k = std::stoi(it.key());
        if (k < 1 || k > c.type.n) throw std::invalid_argument("lambda: index " + it.key() + " out of range");
        int m = it.value().get<int>();
        if (m < 0) throw std::invalid_argument("lambda: multiplicities must be >= 0");
        c.lambda.add(k, m);
      }
    }
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return parse_config(json::parse(in));
}

json form_json(const crystal_poly::LinearForm& f, const crystal_poly::AdaptedSequence& seq) {
  json terms = json::array();
  for (auto [r, c] : f.terms()) {
    auto [s, k] = seq.pair_of(r);
    terms.push_back({{"s", s}, {"k", k}, {"coeff", c}});
  }
  return {{"text", crystal_poly::to_string(f, seq)}, {"constant", f.constant()}, {"terms", terms}};
}

}  // namespace cli
