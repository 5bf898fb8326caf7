#include "tchains/json_io.hpp"

#include <stdexcept>

namespace tchains {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

}  // namespace

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return rat_of(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  fail("rationals must be integers or 'p/q' strings");
}

Json rat_to_json(const Rat& q) {
  return Json{{"value", rat_to_string(q)}, {"decimal", rat_to_decimal(q)}};
}

Json group_to_json(const Group& g) {
  switch (g.family()) {
    case Family::Free:
      return Json{{"family", "free"}, {"rank", g.rank()}};
    case Family::Abelian: {
      Json out{{"family", "abelian"}, {"rank", g.rank()}};
      if (g.has_custom_generators()) {
        Json gens = Json::array();
        for (const auto& s : g.positive_generators()) gens.push_back(s.data);
        out["generators"] = gens;
      }
      return out;
    }
    case Family::Finite: {
      Json gens = Json::array();
      for (const auto& s : g.positive_generators()) gens.push_back(s.data[0]);
      return Json{{"family", "finite"}, {"table", g.table()}, {"generators", gens}};
    }
  }
  fail("unknown group family");
}

Group group_from_json(const Json& j) {
  const Json& family = require(j, "family");
  if (!family.is_string()) fail("group family must be a string");
  const std::string f = family.get<std::string>();
  if (f == "free") {
    return Group::free_group(static_cast<int>(require_int(j, "rank")));
  }
  if (f == "abelian") {
    const int rank = static_cast<int>(require_int(j, "rank"));
    if (j.contains("generators")) {
      std::vector<std::vector<long long>> gens;
      for (const Json& v : j.at("generators")) {
        gens.push_back(v.get<std::vector<long long>>());
      }
      return Group::free_abelian(rank, std::move(gens));
    }
    return Group::free_abelian(rank);
  }
  if (f == "finite") {
    auto table = require(j, "table").get<std::vector<std::vector<int>>>();
    auto gens = require(j, "generators").get<std::vector<int>>();
    return Group::finite_table(std::move(table), std::move(gens));
  }
  fail("unknown group family '" + f + "'");
}

Json element_to_json(const Group& g, const GroupElement& x) {
  g.validate(x);
  if (g.family() == Family::Finite) return Json(x.data[0]);
  return Json(x.data);
}

GroupElement element_from_json(const Group& g, const Json& j) {
  GroupElement x;
  if (g.family() == Family::Finite) {
    if (!j.is_number_integer()) fail("finite group elements are bare indices");
    x.data = {j.get<long long>()};
  } else {
    if (!j.is_array()) fail("free/abelian group elements are integer arrays");
    x.data = j.get<std::vector<long long>>();
  }
  g.validate(x);
  return x;
}

Json chain_to_json(const Group& g, const Chain& c) {
  Json terms = Json::array();
  for (const auto& [t, coeff] : c.terms()) {
    Json tuple = Json::array();
    for (const auto& p : t.points) tuple.push_back(element_to_json(g, p));
    terms.push_back(Json{{"tuple", tuple}, {"coeff", rat_to_string(coeff)}});
  }
  return Json{{"degree", c.degree()}, {"terms", terms}};
}

Chain chain_from_json(const Group& g, const Json& j) {
  const long long degree = require_int(j, "degree");
  if (degree < 0) fail("chain degree must be >= 0");
  Chain c(static_cast<int>(degree));
  for (const Json& term : require(j, "terms")) {
    const Json& tuple = require(term, "tuple");
    if (!tuple.is_array() || tuple.size() != static_cast<std::size_t>(degree) + 1) {
      fail("chain term tuple must have degree+1 entries");
    }
    Tuple t;
    for (const Json& p : tuple) t.points.push_back(element_from_json(g, p));
    if (!t.nondegenerate()) fail("chain term tuple has an adjacent repetition");
    const Rat coeff = rat_from_json(require(term, "coeff"));
    if (coeff == 0) fail("chain term coefficient must be nonzero");
    c.add(t, coeff);
  }
  return c;
}

Json chain_list_to_json(const Group& g, const std::vector<Chain>& chains) {
  Json list = Json::array();
  for (const Chain& c : chains) list.push_back(chain_to_json(g, c));
  return Json{{"chains", list}};
}

std::vector<Chain> chain_list_from_json(const Group& g, const Json& j) {
  const Json& list = j.is_array() ? j : require(j, "chains");
  if (!list.is_array()) fail("chain list must be an array");
  std::vector<Chain> out;
  for (const Json& c : list) out.push_back(chain_from_json(g, c));
  return out;
}

Json combing_to_json(const Combing& c) {
  switch (c.kind()) {
    case Combing::Kind::FreePrefix:
      return Json{{"kind", "free_prefix"}, {"rank", c.group().rank()}};
    case Combing::Kind::AbelianStaircase:
      return Json{{"kind", "abelian_staircase"}, {"rank", c.group().rank()}};
    case Combing::Kind::Table: {
      Json entries = Json::array();
      for (const auto& [key, fx] : c.table_entries()) {
        entries.push_back(Json{{"n", key.first},
                               {"x", element_to_json(c.group(), key.second)},
                               {"fx", element_to_json(c.group(), fx)}});
      }
      Json stab = Json::array();
      for (const auto& [x, s] : c.table_stab()) {
        stab.push_back(Json{{"x", element_to_json(c.group(), x)}, {"stab", s}});
      }
      return Json{{"kind", "table"},
                  {"group", group_to_json(c.group())},
                  {"entries", entries},
                  {"stab", stab},
                  {"lipschitz", rat_to_string(c.declared_lipschitz())},
                  {"closeness", c.declared_closeness()},
                  {"order", c.growth_order()},
                  {"growth_constant", rat_to_string(c.growth_constant())}};
    }
  }
  fail("unknown combing kind");
}

Combing combing_from_json(const Json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "free_prefix") {
    return Combing::free_prefix(static_cast<int>(require_int(j, "rank")));
  }
  if (kind == "abelian_staircase") {
    return Combing::abelian_staircase(static_cast<int>(require_int(j, "rank")));
  }
  if (kind == "table") {
    Group g = group_from_json(require(j, "group"));
    std::map<std::pair<long long, GroupElement>, GroupElement> entries;
    for (const Json& e : require(j, "entries")) {
      entries.emplace(std::make_pair(require_int(e, "n"), element_from_json(g, require(e, "x"))),
                      element_from_json(g, require(e, "fx")));
    }
    std::map<GroupElement, long long> stab;
    for (const Json& s : require(j, "stab")) {
      stab.emplace(element_from_json(g, require(s, "x")), require_int(s, "stab"));
    }
    return Combing::table(std::move(g), std::move(entries), std::move(stab),
                          rat_from_json(require(j, "lipschitz")), require_int(j, "closeness"),
                          require_int(j, "order"), rat_from_json(require(j, "growth_constant")));
  }
  fail("unknown combing kind '" + kind + "'");
}

Json point_map_to_json(const Group& g, const PointMap& m) {
  return std::visit(
      [&](const auto& rule) -> Json {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, PointMap::Identity>) {
          return Json{{"kind", "identity"}};
        } else if constexpr (std::is_same_v<R, PointMap::Constant>) {
          return Json{{"kind", "constant"}, {"point", element_to_json(g, rule.pt)}};
        } else if constexpr (std::is_same_v<R, PointMap::Stage>) {
          return Json{{"kind", "combing_stage"},
                      {"combing", combing_to_json(*rule.combing)},
                      {"n", rule.n}};
        } else if constexpr (std::is_same_v<R, PointMap::Table>) {
          Json entries = Json::array();
          for (const auto& [x, fx] : rule.entries) {
            entries.push_back(
                Json{{"x", element_to_json(g, x)}, {"fx", element_to_json(g, fx)}});
          }
          return Json{{"kind", "table"}, {"entries", entries}};
        } else {
          return Json{{"kind", "compose"},
                      {"outer", point_map_to_json(g, *rule.outer)},
                      {"inner", point_map_to_json(g, *rule.inner)}};
        }
      },
      m.rule());
}

PointMap point_map_from_json(const Group& g, const Json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "identity") return PointMap::identity();
  if (kind == "constant") {
    return PointMap::constant(element_from_json(g, require(j, "point")));
  }
  if (kind == "combing_stage") {
    auto combing = std::make_shared<const Combing>(combing_from_json(require(j, "combing")));
    if (!combing->group().same_spec(g)) fail("combing stage group does not match");
    return PointMap::combing_stage(std::move(combing), require_int(j, "n"));
  }
  if (kind == "table") {
    std::map<GroupElement, GroupElement> entries;
    for (const Json& e : require(j, "entries")) {
      entries.emplace(element_from_json(g, require(e, "x")),
                      element_from_json(g, require(e, "fx")));
    }
    return PointMap::table(std::move(entries));
  }
  if (kind == "compose") {
    return PointMap::compose(point_map_from_json(g, require(j, "outer")),
                             point_map_from_json(g, require(j, "inner")));
  }
  fail("unknown point map kind '" + kind + "'");
}

Json metric_space_to_json(const FiniteMetricSpace& space) {
  Json dist = Json::array();
  for (const auto& row : space.distances()) {
    Json r = Json::array();
    for (const Rat& v : row) r.push_back(rat_to_string(v));
    dist.push_back(r);
  }
  return Json{{"points", space.labels()}, {"dist", dist}};
}

FiniteMetricSpace metric_space_from_json(const Json& j) {
  const Json& points = require(j, "points");
  if (!points.is_array()) fail("metric space points must be an array");
  std::vector<std::string> labels;
  for (const Json& p : points) {
    labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  }
  const Json& dist = require(j, "dist");
  std::vector<std::vector<Rat>> d;
  for (const Json& row : dist) {
    std::vector<Rat> r;
    for (const Json& v : row) r.push_back(rat_from_json(v));
    d.push_back(std::move(r));
  }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

Json combing_report_to_json(const Combing& combing, const CombingReport& report) {
  return Json{{"radius", report.radius},
              {"axioms_ok", report.axioms_ok},
              {"basepoint_ok", report.basepoint_ok},
              {"stabilization_ok", report.stabilization_ok},
              {"lipschitz_observed", rat_to_json(report.lipschitz_observed)},
              {"lipschitz_declared", rat_to_string(combing.declared_lipschitz())},
              {"lipschitz_ok", report.lipschitz_ok},
              {"closeness_observed", report.closeness_observed},
              {"closeness_declared", combing.declared_closeness()},
              {"closeness_ok", report.closeness_ok},
              {"growth_order", combing.growth_order()},
              {"growth_constant", rat_to_string(combing.growth_constant())},
              {"growth_ok", report.growth_ok},
              {"steps_max_by_shell", report.steps_max_by_shell}};
}

Json profile_report_to_json(const Group& g, const ProfileReport& report) {
  Json shells = Json::array();
  for (std::size_t s = 0; s < report.shell_max.size(); ++s) {
    Json entry{{"shell", s},
               {"ratio", rat_to_string(report.shell_max[s])},
               {"decimal", rat_to_decimal(report.shell_max[s])}};
    if (report.shell_witness[s]) {
      Json tuple = Json::array();
      for (const auto& p : report.shell_witness[s]->points) {
        tuple.push_back(element_to_json(g, p));
      }
      entry["witness"] = tuple;
    }
    shells.push_back(std::move(entry));
  }
  return Json{{"k", report.k},
              {"degree", report.degree},
              {"length_bound", report.length_bound},
              {"control_bound", report.control_bound},
              {"growth_order", report.growth_order},
              {"shell_max", shells},
              {"max_output_control_radius", report.max_output_control_radius},
              {"tuples_examined", report.tuples_examined}};
}

Json growth_report_to_json(const Group& g, const GrowthReport& report) {
  Json witness = Json::array();
  for (const auto& x : report.witness) witness.push_back(element_to_json(g, x));
  Json by_radius = Json::array();
  for (const Rat& c : report.constant_by_radius) by_radius.push_back(rat_to_string(c));
  return Json{{"k", report.k},
              {"radius", report.radius},
              {"least_constant", rat_to_json(report.least_constant)},
              {"witness", witness},
              {"constant_by_radius", by_radius},
              {"plateaued", report.plateaued}};
}

Json cohomology_report_to_json(const Group& g, const std::string& method,
                               const std::vector<long long>& dims) {
  return Json{{"group", group_to_json(g)}, {"method", method}, {"dims", dims}};
}

}  // namespace tchains
