#include "solvpair/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace solvpair {

namespace {

using Json = nlohmann::ordered_json;

Rat json_rat(const Json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

Json rat_json(const Rat& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
    return Json(v.get_num().get_si());
  }
  return Json(rat_to_string(v));
}

Derivation derivation_from_json(int nvars, const Json& obj) {
  if (!obj.is_object() || !obj.contains("images") ||
      !obj.at("images").is_array()) {
    throw std::invalid_argument("derivation needs an \"images\" array");
  }
  const Json& arr = obj.at("images");
  if (static_cast<int>(arr.size()) != nvars) {
    throw std::invalid_argument("derivation needs one image per variable");
  }
  std::vector<Poly> images;
  images.reserve(nvars);
  for (const Json& item : arr) {
    if (!item.is_string()) {
      throw std::invalid_argument("derivation images must be strings");
    }
    images.push_back(parse_poly(nvars, item.get<std::string>()));
  }
  return Derivation::make(std::move(images));
}

}  // namespace

PairFile read_pair_json_text(const std::string& text, int bound) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nvars") ||
      !doc.at("nvars").is_number_integer()) {
    throw std::invalid_argument("pair file needs an integer \"nvars\"");
  }
  const int nvars = doc.at("nvars").get<int>();
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");

  if (doc.contains("jordan")) {
    const Json& j = doc.at("jordan");
    if (!j.is_object() || !j.contains("blocks") || !j.contains("offsets")) {
      throw std::invalid_argument(
          "jordan shortcut needs \"blocks\" and \"offsets\"");
    }
    std::vector<int> blocks;
    for (const Json& b : j.at("blocks")) {
      if (!b.is_number_integer()) {
        throw std::invalid_argument("blocks must be integers");
      }
      blocks.push_back(b.get<int>());
    }
    std::vector<Rat> offsets;
    for (const Json& a : j.at("offsets")) offsets.push_back(json_rat(a));
    int total = 0;
    for (const int b : blocks) total += b;
    if (total != nvars) {
      throw std::invalid_argument("block sizes must sum to nvars");
    }
    PairFile f{canonical_pair(blocks, offsets, bound), true, blocks, offsets};
    return f;
  }

  if (!doc.contains("delta") || !doc.contains("gamma")) {
    throw std::invalid_argument("pair file needs \"delta\" and \"gamma\"");
  }
  Derivation delta = derivation_from_json(nvars, doc.at("delta"));
  Derivation gamma = derivation_from_json(nvars, doc.at("gamma"));
  PairFile f{SolvablePair::validate(std::move(delta), std::move(gamma), bound),
             false,
             {},
             {}};
  return f;
}

PairFile read_pair_file(const std::string& path, int bound) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_pair_json_text(buf.str(), bound);
}

std::string derivation_to_json(const Derivation& d) {
  Json obj;
  Json arr = Json::array();
  for (const Poly& img : d.images) arr.push_back(img.str());
  obj["images"] = std::move(arr);
  return obj.dump();
}

Derivation derivation_from_json_text(int nvars, const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return derivation_from_json(nvars, doc);
}

std::string report_to_json(const StructureReport& rep, int pder_dim,
                           const std::vector<int>& center_dims) {
  Json obj;
  obj["jordan_type"] = rep.jordan_type;
  if (rep.has_offsets) {
    Json offsets = Json::array();
    for (const Rat& a : rep.offsets) offsets.push_back(rat_json(a));
    obj["offsets"] = std::move(offsets);
  } else {
    obj["offsets"] = nullptr;
  }
  obj["trace"] = rat_to_string(rep.trace);
  obj["nakayama_c"] = rat_to_string(rep.nakayama_c);
  obj["unimodular"] = rep.unimodular;
  obj["calabi_yau"] = rep.calabi_yau;
  obj["generic"] = rep.generic;
  obj["commutative"] = rep.commutative;
  obj["pder_dim"] = pder_dim;
  obj["center_dims"] = center_dims;
  return obj.dump(2);
}

}  // namespace solvpair
