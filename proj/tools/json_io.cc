#include "json_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lrscatter::cli {

Json ParseJson(const std::string& text, const std::string& what) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InputError(what + ": cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

std::vector<int> IntArray(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw InputError(what + ": expected integers, got " + v.dump());
    }
    out.push_back(v.get<int>());
  }
  return out;
}

DominantWeight WeightFromJson(const Json& j, int rank,
                              const std::string& what) {
  std::vector<int> v = IntArray(j, what);
  if (static_cast<int>(v.size()) > rank) {
    while (static_cast<int>(v.size()) > rank && v.back() == 0) v.pop_back();
    if (static_cast<int>(v.size()) > rank) {
      throw InputError(what + ": more than N = " + std::to_string(rank) +
                       " nonzero parts");
    }
  }
  v.resize(rank, 0);
  try {
    return DominantWeight(v);
  } catch (const std::invalid_argument& e) {
    throw InputError(what + ": " + e.what());
  }
}

BasisTuple TupleFromJson(const Json& j, const std::string& what) {
  try {
    return BasisTuple(IntArray(j, what));
  } catch (const std::invalid_argument& e) {
    throw InputError(what + ": " + e.what());
  }
}

ReducedWord WordFromJson(const Json& j, int rank, const std::string& what) {
  std::vector<int> letters = IntArray(j, what);
  if (rank <= 0) {
    rank = 1;
    for (int a : letters) rank = std::max(rank, a + 1);
  }
  try {
    return ReducedWord(letters, rank);
  } catch (const std::invalid_argument& e) {
    throw InputError(what + ": " + e.what());
  }
}

ParamCollection ParamsFromJson(const Json& j, int rank,
                               const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  std::vector<std::pair<Inversion, int>> entries;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
        !e.contains("c") || !e["i"].is_number_integer() ||
        !e["j"].is_number_integer() || !e["c"].is_number_integer()) {
      throw InputError(what + ": expected {\"i\":int,\"j\":int,\"c\":int}, "
                       "got " + e.dump());
    }
    entries.push_back({{e["i"].get<int>(), e["j"].get<int>()},
                       e["c"].get<int>()});
  }
  std::sort(entries.begin(), entries.end());
  std::vector<Inversion> keys;
  std::vector<int> values;
  for (const auto& [k, v] : entries) {
    keys.push_back(k);
    values.push_back(v);
  }
  try {
    return ParamCollection(keys, values, rank);
  } catch (const std::invalid_argument& e) {
    throw InputError(what + ": " + e.what());
  }
}

Json ToJson(const Partition& p) { return p.parts(); }
Json ToJson(const DominantWeight& w) { return w.parts(); }
Json ToJson(const BasisTuple& t) { return t.entries(); }
Json ToJson(const ReducedWord& w) { return w.letters(); }

Json ToJson(const ParamCollection& c) {
  Json out = Json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out.push_back({{"i", c.keys()[k].i},
                   {"j", c.keys()[k].j},
                   {"c", c.values()[k]}});
  }
  return out;
}

Json ToJson(const LinearForm& f) {
  Json out = Json::array();
  for (const auto& [p, coeff] : f.coeffs()) {
    out.push_back({{"i", p.i}, {"j", p.j}, {"coeff", coeff}});
  }
  return out;
}

LinearForm FormFromJson(const Json& j) {
  LinearForm f;
  for (const auto& t : j) {
    f.Add(t.at("i").get<int>(), t.at("j").get<int>(),
          t.at("coeff").get<int>());
  }
  return f;
}

Json ToJson(const ConeDescription& d) {
  Json forms = Json::array(), text = Json::array();
  for (const auto& f : d.inequalities) {
    forms.push_back(ToJson(f));
    text.push_back(ToString(f) + " >= 0");
  }
  return {{"word", ToJson(d.word)},
          {"n", d.word.rank()},
          {"inequalities", forms},
          {"text", text}};
}

Json ToJson(const WeightedTupleSum& s) {
  Json out = Json::array();
  for (const auto& [t, mult] : s.terms()) {
    out.push_back({{"tuple", ToJson(t)}, {"multiplicity", mult}});
  }
  return out;
}

Json ToJson(const Move& m) {
  Json out = {{"kind", m.kind == MoveKind::kTwo ? 2 : 3},
              {"position", m.position}};
  if (m.kind == MoveKind::kThree) {
    out["direction"] =
        m.direction == MoveDirection::kForward ? "forward" : "backward";
  }
  return out;
}

Json ToJson(const BzPattern& f) {
  return {{"N", f.rank()}, {"values", f.values()}};
}

}  // namespace lrscatter::cli
