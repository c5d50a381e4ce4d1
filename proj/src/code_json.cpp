#include "negaz4/code_json.hpp"

#include <stdexcept>

namespace negaz4 {

Json to_json(const IdealSpec& spec, unsigned d) {
  Json out;
  out["j"] = spec.j + 1;
  out["case"] = to_string(spec.kase);
  out["lambda"] = spec.lambda ? Json(*spec.lambda) : Json(nullptr);
  out["t"] = spec.t ? Json(*spec.t) : Json(nullptr);
  Json digits = Json::object();
  for (const auto& [i, digit] : spec.b_digits) {
    Json coeffs = Json::array();
    for (unsigned c = 0; c < d; ++c) coeffs.push_back(digit[c]);
    digits[std::to_string(i)] = std::move(coeffs);
  }
  out["b"] = std::move(digits);
  out["size"] = to_decimal(spec.size);
  return out;
}

Json to_json(const CodeSpec& spec, const CodeSpecStream& stream) {
  Json out;
  out["n"] = spec.n;
  out["k"] = spec.k;
  Json choice = Json::array();
  for (const IdealSpec& s : spec.choice) choice.push_back(to_json(s, stream.families().at(s.j).d()));
  out["choice"] = std::move(choice);
  out["total_size"] = to_decimal(spec.total_size);
  return out;
}

namespace {

std::optional<unsigned> optional_uint(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<unsigned>();
}

CodeSpecStream stream_for(unsigned n, unsigned k) {
  return k == 0 ? enumerate_cyclic_odd(n) : enumerate_negacyclic(n, k);
}

}  // namespace

ParsedCode parse_code_spec(const Json& j) {
  try {
    const unsigned n = j.at("n").get<unsigned>();
    const unsigned k = j.at("k").get<unsigned>();
    CodeSpecStream stream = stream_for(n, k);
    const auto& families = stream.families();
    const Json& choice = j.at("choice");
    if (!choice.is_array() || choice.size() != families.size())
      throw std::invalid_argument("choice must list one ideal per factor");

    CodeSpec spec;
    spec.n = n;
    spec.k = k;
    spec.total_size = 1;
    std::vector<bool> filled(families.size(), false);
    spec.choice.resize(families.size());
    for (const Json& entry : choice) {
      const unsigned jj = entry.at("j").get<unsigned>();
      if (jj < 1 || jj > families.size() || filled[jj - 1]) throw std::invalid_argument("bad or repeated factor index");
      const LocalIdealFamily& fam = families[jj - 1];
      std::map<unsigned, Z4Poly> digits;
      if (entry.contains("b") && !entry["b"].is_null()) {
        for (const auto& [key, coeffs] : entry["b"].items()) {
          std::vector<std::uint8_t> c;
          for (const Json& v : coeffs) {
            const int x = v.get<int>();
            if (x != 0 && x != 1) throw std::invalid_argument("digit coefficients must be 0 or 1");
            c.push_back(static_cast<std::uint8_t>(x));
          }
          if (c.size() != fam.d()) throw std::invalid_argument("digit must have d coefficients");
          digits[static_cast<unsigned>(std::stoul(key))] = Z4Poly(std::move(c));
        }
      }
      IdealSpec s = fam.make(parse_ideal_case(entry.at("case").get<std::string>()), optional_uint(entry, "lambda"),
                             optional_uint(entry, "t"), digits);
      if (entry.contains("size") && BigInt(entry["size"].get<std::string>()) != s.size)
        throw std::invalid_argument("stated size disagrees with the ideal");
      spec.total_size *= s.size;
      spec.choice[jj - 1] = std::move(s);
      filled[jj - 1] = true;
    }
    if (j.contains("total_size") && BigInt(j["total_size"].get<std::string>()) != spec.total_size)
      throw std::invalid_argument("stated total size disagrees with the ideals");
    return {std::move(stream), std::move(spec)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed code spec: ") + e.what());
  }
}

ParsedCode parse_code_spec(const std::string& text) {
  try {
    return parse_code_spec(Json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace negaz4
