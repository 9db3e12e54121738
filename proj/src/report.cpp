// Copyright 2026 The qline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qline/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qline/error.hpp"

namespace qline::report {

using nlohmann::json;

namespace {

json count_to_json(Count value) {
  if (fits_u64(value)) return static_cast<std::uint64_t>(value);
  return to_string(value);
}

Count count_from_json(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    if (auto parsed = parse_count(j.get<std::string>())) return *parsed;
  }
  throw std::invalid_argument("malformed count: " + j.dump());
}

std::string yes_no(bool flag) { return flag ? "yes" : "no"; }

std::string factor_legend(const std::vector<FactorInfo>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += ", ";
    out += fmt::format("{}^{}", f.prime, f.exponent);
  }
  return "(" + out + ")";
}

std::string vec_id(const Vec2& v) { return fmt::format("{}_{}", v.b(), v.c()); }

}  // namespace

std::string format_degree(const std::vector<unsigned>& deg) {
  return "(" + fmt::format("{}", fmt::join(deg, ",")) + ")";
}

AnalysisReport analyze(const Modulus& m, const std::optional<Vec2>& v) {
  AnalysisReport r;
  r.d = m.value();
  for (const auto& f : m.factors()) r.factors.push_back({f.prime, f.exponent});
  r.line_cardinality = line_cardinality(m);
  r.group_order = checked_pow(m.value(), 3);
  for (const auto& e : layer_table(m).entries) {
    r.layers.push_back({e.degree.deltas, e.degree.total(), e.vectors, e.operators,
                        e.points_per_vector, e.pg_label});
  }
  if (v) {
    require_same_modulus(m, v->modulus());
    VectorResult q;
    q.b = v->b();
    q.c = v->c();
    q.degree = degree(*v).deltas;
    q.admissible = is_admissible(*v);
    q.points_through = count_points_through(*v);
    q.perp_cardinality = perp_cardinality(*v);
    if (!v->is_zero()) q.u_size = u_size(*v);
    q.u_equals_perp = u_equals_perp(*v);
    q.commuting_operators = commuting_count(PauliOp(m, 0, v->b(), v->c()));
    r.vector = q;
  }
  return r;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back({{"prime", f.prime}, {"exponent", f.exponent}});
  j["modulus"] = {{"d", r.d}, {"factors", factors}};
  j["line_cardinality"] = count_to_json(r.line_cardinality);
  j["group_order"] = count_to_json(r.group_order);
  json layers = json::array();
  for (const auto& l : r.layers) {
    layers.push_back({
        {"degree", l.degree},
        {"delta_sum", l.delta_sum},
        {"vectors", count_to_json(l.vectors)},
        {"operators", count_to_json(l.operators)},
        {"points_per_vector", count_to_json(l.points_per_vector)},
        {"pg_label", l.pg_label ? json(*l.pg_label) : json(nullptr)},
    });
  }
  j["layers"] = layers;
  if (r.vector) {
    const auto& q = *r.vector;
    j["vector"] = {
        {"b", q.b},
        {"c", q.c},
        {"degree", q.degree},
        {"admissible", q.admissible},
        {"points_through", count_to_json(q.points_through)},
        {"perp_cardinality", count_to_json(q.perp_cardinality)},
        {"u_size", q.u_size ? count_to_json(*q.u_size) : json(nullptr)},
        {"u_equals_perp", q.u_equals_perp},
        {"commuting_operators", count_to_json(q.commuting_operators)},
    };
  } else {
    j["vector"] = nullptr;
  }
  return j;
}

AnalysisReport report_from_json(const json& j) {
  if (j.at("schema_version").get<std::string>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema version");
  }
  AnalysisReport r;
  r.d = j.at("modulus").at("d").get<std::uint64_t>();
  for (const auto& f : j.at("modulus").at("factors")) {
    r.factors.push_back({f.at("prime").get<std::uint64_t>(), f.at("exponent").get<unsigned>()});
  }
  r.line_cardinality = count_from_json(j.at("line_cardinality"));
  r.group_order = count_from_json(j.at("group_order"));
  for (const auto& l : j.at("layers")) {
    LayerRow row;
    row.degree = l.at("degree").get<std::vector<unsigned>>();
    row.delta_sum = l.at("delta_sum").get<unsigned>();
    row.vectors = count_from_json(l.at("vectors"));
    row.operators = count_from_json(l.at("operators"));
    row.points_per_vector = count_from_json(l.at("points_per_vector"));
    if (!l.at("pg_label").is_null()) {
      row.pg_label = l.at("pg_label").get<std::vector<unsigned>>();
    }
    r.layers.push_back(std::move(row));
  }
  if (j.contains("vector") && !j.at("vector").is_null()) {
    const json& v = j.at("vector");
    VectorResult q;
    q.b = v.at("b").get<Residue>();
    q.c = v.at("c").get<Residue>();
    q.degree = v.at("degree").get<std::vector<unsigned>>();
    q.admissible = v.at("admissible").get<bool>();
    q.points_through = count_from_json(v.at("points_through"));
    q.perp_cardinality = count_from_json(v.at("perp_cardinality"));
    if (!v.at("u_size").is_null()) q.u_size = count_from_json(v.at("u_size"));
    q.u_equals_perp = v.at("u_equals_perp").get<bool>();
    q.commuting_operators = count_from_json(v.at("commuting_operators"));
    r.vector = q;
  }
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::string out;
  out += fmt::format("modulus: {}\n", r.d);
  out += fmt::format("factor order: {}\n", factor_legend(r.factors));
  out += fmt::format("projective line points: {}\n", to_string(r.line_cardinality));
  out += fmt::format("group order: {}\n", to_string(r.group_order));
  out += fmt::format("layers: {}\n", r.layers.size());
  out += fmt::format("  {:<12} {:>5} {:>12} {:>14} {:>14}  {}\n", "degree", "sum",
                     "vectors", "operators", "points/vector", "PG label");
  for (const auto& l : r.layers) {
    out += fmt::format("  {:<12} {:>5} {:>12} {:>14} {:>14}  {}\n",
                       format_degree(l.degree), l.delta_sum, to_string(l.vectors),
                       to_string(l.operators), to_string(l.points_per_vector),
                       l.pg_label ? format_degree(*l.pg_label) : "-");
  }
  if (r.vector) {
    const auto& q = *r.vector;
    out += fmt::format("vector: ({},{})\n", q.b, q.c);
    out += fmt::format("  degree: {}\n", format_degree(q.degree));
    out += fmt::format("  admissible: {}\n", yes_no(q.admissible));
    out += fmt::format("  points through: {}\n", to_string(q.points_through));
    out += fmt::format("  perp-set size: {}\n", to_string(q.perp_cardinality));
    out += fmt::format("  U size: {}\n", q.u_size ? to_string(*q.u_size) : "undefined");
    out += fmt::format("  U equals perp: {}\n", yes_no(q.u_equals_perp));
    out += fmt::format("  commuting operators: {}\n", to_string(q.commuting_operators));
  }
  return out;
}

std::string points_text(const LineCatalog& cat) {
  std::string out = fmt::format("{} points\n", cat.points.size());
  for (const auto& pt : cat.points) {
    out += fmt::format("({},{})\n", pt.generator().b(), pt.generator().c());
  }
  return out;
}

json points_json(const LineCatalog& cat) {
  const Modulus& m = cat.modulus;
  json points = json::array();
  for (const auto& pt : cat.points) {
    json comps = json::array();
    for (std::size_t k = 0; k < m.rank(); ++k) {
      const auto [b, c] = pt.generator().component(k);
      comps.push_back({{"modulus", m.factor(k).value}, {"generator", {b, c}}});
    }
    points.push_back({{"generator", {pt.generator().b(), pt.generator().c()}},
                      {"components", comps}});
  }
  json factors = json::array();
  for (const auto& f : m.factors()) factors.push_back({{"prime", f.prime}, {"exponent", f.exponent}});
  return {{"d", m.value()},
          {"factors", factors},
          {"count", cat.points.size()},
          {"points", points}};
}

std::string verify_text(const VerifyReport& r) {
  std::string out = fmt::format("verify d={}..{}\n", r.first, r.last);
  for (const auto& t : r.checks) {
    if (t.passed == 0 && t.failed == 0) {
      out += fmt::format("  {:<18} skipped\n", t.name);
      continue;
    }
    out += fmt::format("  {:<18} pass {:>9}  fail {:>6}\n", t.name, t.passed, t.failed);
  }
  for (const auto& t : r.checks) {
    if (!t.ok()) {
      out += fmt::format("first counterexample [{}]: {}\n", t.name, t.first_counterexample);
    }
  }
  out += r.ok() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

std::string maximal_sets_text(const Modulus& m, const std::vector<CommutingSet>& sets) {
  const auto free = std::count_if(sets.begin(), sets.end(),
                                  [](const CommutingSet& s) { return s.free_cyclic; });
  std::string out = fmt::format("{} maximal commuting sets over Z_{} ({} free cyclic)\n",
                                sets.size(), m.value(), free);
  for (const auto& s : sets) {
    std::vector<std::string> items;
    for (const auto& v : s.vectors) items.push_back(fmt::format("({},{})", v.b(), v.c()));
    out += fmt::format("{} size={} {{{}}}\n", s.free_cyclic ? "free    " : "non-free",
                       s.vectors.size(), fmt::join(items, ","));
  }
  return out;
}

std::string layers_dot(const Modulus& m, std::uint64_t scan_cap) {
  const std::vector<Vec2> vectors = all_vectors(m, scan_cap);
  const LineCatalog cat = enumerate_points(m);

  std::map<Vec2, Count> through;
  std::set<Count> classes;
  for (const auto& v : vectors) {
    const Count n = count_points_through(v);
    through.emplace(v, n);
    classes.insert(n);
  }
  const std::vector<Count> class_list(classes.begin(), classes.end());

  std::string out;
  out += fmt::format("// P1(Z_{}): {} vectors, {} points, {} size classes\n", m.value(),
                     vectors.size(), cat.points.size(), class_list.size());
  out += fmt::format("graph layers_{} {{\n", m.value());
  out += "  node [shape=circle, label=\"\"];\n";
  for (const auto& v : vectors) {
    const Count n = through.at(v);
    const auto size_class = static_cast<std::size_t>(
        std::lower_bound(class_list.begin(), class_list.end(), n) - class_list.begin());
    out += fmt::format(
        "  \"{}\" [degree=\"{}\", points={}, size_class={}, width={:.2f}];\n",
        vec_id(v), format_degree(degree(v).deltas), to_string(n), size_class,
        0.2 + 0.1 * static_cast<double>(size_class));
  }
  for (const auto& pt : cat.points) {
    const auto members = pt.vectors();
    const std::string name = vec_id(pt.generator());
    for (std::size_t u = 0; u + 1 < members.size(); ++u) {
      out += fmt::format("  \"{}\" -- \"{}\" [point=\"{}\"];\n", vec_id(members[u]),
                         vec_id(members[u + 1]), name);
    }
  }
  out += "}\n";
  return out;
}

}  // namespace qline::report
