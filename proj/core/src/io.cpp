#include "ywalls/io.hpp"

#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "ywalls/coords.hpp"

namespace ywalls {

namespace {

using json = nlohmann::ordered_json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("bad value for \"") + key + "\"");
  }
}

json wall_json(const YoungWallD& wall) {
  json cols = json::array();
  for (const auto& c : wall.columns) {
    json col{{"blocks", c.blocks}};
    if (c.top) col["top"] = *c.top == Top::Lower ? "lower" : "upper";
    cols.push_back(std::move(col));
  }
  return json{{"type", "D"}, {"rank", wall.rank.n()}, {"columns", std::move(cols)}};
}

json abacus_json(const AbacusConfig& a) {
  json colored = json::array();
  for (const auto& [p, site] : a.colored)
    colored.push_back({{"pos", p},
                       {"color", site.color == BeadColor::White ? "white" : "black"},
                       {"mult", site.mult}});
  return json{{"rank", a.rank.n()}, {"uncolored", a.uncolored}, {"colored", std::move(colored)}};
}

json coeff_json(const Coeff& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

json term_json(const Monomial& m, const Coeff& c, bool motivic) {
  json t{{"e", m.e}};
  if (motivic) t["L"] = m.lexp;
  t["coeff"] = coeff_json(c);
  return t;
}

}  // namespace

std::string wall_to_json(const YoungWallD& wall) { return wall_json(wall).dump(); }

YoungWallD wall_from_json(std::string_view text) {
  const json j = parse(text);
  if (j.is_object() && j.contains("type") && j.at("type") != "D")
    throw std::invalid_argument("wall JSON: only type \"D\" walls are supported");
  YoungWallD wall(RankD(field<int>(j, "rank")));
  const json cols = field<json>(j, "columns");
  if (!cols.is_array()) throw std::invalid_argument("wall JSON: \"columns\" must be an array");
  for (const auto& c : cols) {
    Column col{field<Int>(c, "blocks"), std::nullopt};
    if (c.contains("top")) {
      const auto top = field<std::string>(c, "top");
      if (top == "lower")
        col.top = Top::Lower;
      else if (top == "upper")
        col.top = Top::Upper;
      else
        throw std::invalid_argument("wall JSON: top must be \"lower\" or \"upper\"");
    }
    wall.columns.push_back(col);
  }
  return wall;
}

std::string abacus_to_json(const AbacusConfig& a) { return abacus_json(a).dump(); }

AbacusConfig abacus_from_json(std::string_view text) {
  const json j = parse(text);
  AbacusConfig a(RankD(field<int>(j, "rank")));
  for (Int p : field<std::vector<Int>>(j, "uncolored"))
    if (!a.uncolored.insert(p).second)
      throw std::invalid_argument("abacus JSON: repeated uncoloured position");
  for (const auto& c : field<json>(j, "colored")) {
    const auto color = field<std::string>(c, "color");
    if (color != "white" && color != "black")
      throw std::invalid_argument("abacus JSON: color must be \"white\" or \"black\"");
    const ColoredSite site{color == "white" ? BeadColor::White : BeadColor::Black,
                           field<Int>(c, "mult")};
    if (!a.colored.emplace(field<Int>(c, "pos"), site).second)
      throw std::invalid_argument("abacus JSON: repeated coloured position");
  }
  validate_abacus(a);
  return a;
}

std::string core_result_to_json(const CoreResult& r) {
  const Int P = r.core.rank.period();
  json pairs = json::array();
  for (std::size_t i = 0; i < r.pairCounts.size(); ++i) {
    const Int s = static_cast<Int>(i) + 1;
    pairs.push_back({{"s", s}, {"partner", P - s}, {"count", r.pairCounts[i]}});
  }
  json out{{"rank", r.core.rank.n()},
           {"barsRemoved", r.barsRemoved},
           {"channelCounts", {{"pairs", std::move(pairs)}, {"colored", r.coloredCount}}},
           {"core", abacus_json(r.core)},
           {"coreWall", wall_json(abacus_to_wall(r.core))},
           {"coreWeight", abacus_weight(r.core)},
           {"z", core_to_z(r.core)}};
  return out.dump();
}

std::string series_to_json(const TruncatedSeries& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back(term_json(m, c, s.motivic()));
  return json{{"vars", s.vars()}, {"bound", s.bound()}, {"motivic", s.motivic()}, {"terms", std::move(terms)}}
      .dump();
}

std::string series_to_jsonl(const TruncatedSeries& s) {
  std::string out;
  for (const auto& [m, c] : s.terms()) out += term_json(m, c, s.motivic()).dump() + '\n';
  return out;
}

}  // namespace ywalls
