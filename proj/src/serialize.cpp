#include "fuskit/serialize.hpp"

#include <cstdio>
#include <map>

#include "fuskit/error.hpp"

namespace fuskit {

using nlohmann::json;

ojson labels_json(const FusionRing& ring, const std::vector<int>& members) {
  ojson out = ojson::array();
  for (int i : members) out.push_back(ring.label(i));
  return out;
}

ojson real_to_json(const RealValue& v) {
  if (v.is_exact()) return v.exact().to_string();
  ojson out;
  out["value"] = v.to_string();
  out["eps"] = v.eps();
  return out;
}

ojson ring_to_json(const FusionRing& ring) {
  ojson out;
  out["name"] = ring.name();
  out["basis"] = ring.basis();
  out["unit"] = ring.label(ring.unit());
  ojson duals = ojson::object();
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i) duals[ring.label(i)] = ring.label(ring.dual(i));
  out["dual"] = std::move(duals);
  ojson constants = ojson::array();
  for (const auto& c : ring.constants()) {
    ojson e;
    e["i"] = ring.label(c.i);
    e["j"] = ring.label(c.j);
    e["k"] = ring.label(c.k);
    e["m"] = c.m;
    constants.push_back(std::move(e));
  }
  out["constants"] = std::move(constants);
  return out;
}

std::string ring_to_text(const FusionRing& ring) { return ring_to_json(ring).dump(2) + "\n"; }

namespace {

Error schema(const std::string& why) { return Error(Errc::ParseError, "ring json: " + why); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw schema(std::string("missing '") + key + "'");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw schema(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

FusionRing ring_from_json(const json& j) {
  if (!j.is_object()) throw schema("top level must be an object");
  const std::string name = j.contains("name") ? text(j.at("name"), "name") : std::string("ring");
  const json& basis_j = member(j, "basis");
  if (!basis_j.is_array() || basis_j.empty()) throw schema("basis must be a non-empty array");
  std::vector<std::string> basis;
  std::map<std::string, int> index;
  for (const auto& b : basis_j) {
    basis.push_back(text(b, "basis label"));
    if (!index.emplace(basis.back(), static_cast<int>(basis.size()) - 1).second)
      throw Error(Errc::InvalidArgument, "duplicate basis label '" + basis.back() + "'");
  }
  const auto lookup = [&](const json& v, const char* what) {
    const std::string l = text(v, what);
    const auto it = index.find(l);
    if (it == index.end()) throw Error(Errc::UnknownElement, std::string(what) + " '" + l + "' is not a basis label");
    return it->second;
  };
  const int unit = lookup(member(j, "unit"), "unit");

  const json& dual_j = member(j, "dual");
  if (!dual_j.is_object()) throw schema("dual must be an object");
  std::vector<int> dual(basis.size(), -1);
  for (const auto& [key, value] : dual_j.items()) {
    const int i = lookup(json(key), "dual key");
    dual[static_cast<std::size_t>(i)] = lookup(value, "dual value");
  }
  for (std::size_t i = 0; i < dual.size(); ++i)
    if (dual[i] < 0) throw schema("no dual given for '" + basis[i] + "'");

  const json& constants_j = member(j, "constants");
  if (!constants_j.is_array()) throw schema("constants must be an array");
  std::vector<StructureConstant> constants;
  for (const auto& c : constants_j) {
    const json& m = member(c, "m");
    if (!m.is_number_integer()) throw schema("multiplicity must be an integer");
    constants.push_back({lookup(member(c, "i"), "i"), lookup(member(c, "j"), "j"), lookup(member(c, "k"), "k"),
                         m.get<std::int64_t>()});
  }
  return FusionRing(name, std::move(basis), unit, std::move(dual), std::move(constants));
}

FusionRing ring_from_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed json: ") + e.what());
  }
  return ring_from_json(j);
}

ojson group_to_json(const GroupTable& g) {
  ojson out;
  out["elements"] = g.labels();
  out["identity"] = g.label(g.identity());
  ojson rows = ojson::array();
  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    ojson row = ojson::array();
    for (int b = 0; b < static_cast<int>(g.order()); ++b) row.push_back(g.label(g.mul(a, b)));
    rows.push_back(std::move(row));
  }
  out["table"] = std::move(rows);
  return out;
}

ojson grading_to_json(const GradingData& grading, const FusionRing& ring) {
  ojson out;
  out["group"] = group_to_json(grading.group);
  ojson comps = ojson::object();
  for (std::size_t c = 0; c < grading.components.size(); ++c)
    comps[grading.group.label(static_cast<int>(c))] = labels_json(ring, grading.components[c]);
  out["components"] = std::move(comps);
  out["trivial"] = grading.group.label(grading.trivial);
  return out;
}

ojson report_to_json(const CheckReport& report) {
  ojson out;
  out["check"] = report.check;
  out["pass"] = report.pass;
  out["witness"] = report.witness;
  out["details"] = report.details;
  return out;
}

ojson validation_to_json(const ValidationReport& report, const FusionRing& ring) {
  ojson out;
  out["ring"] = ring.name();
  out["pass"] = report.pass();
  ojson checks = ojson::array();
  for (const auto& c : report.checks) {
    ojson e;
    e["axiom"] = c.axiom;
    e["pass"] = c.pass;
    e["witness"] = c.pass ? ojson(nullptr) : labels_json(ring, c.witness);
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace fuskit
