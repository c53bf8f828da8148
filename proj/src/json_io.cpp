#include "schurlab/json_io.hpp"

#include "schurlab/error.hpp"

namespace schurlab {

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (int v : p.parts()) out.push_back(v);
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw SchurError(ErrorCode::ParseError, "partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchurError(ErrorCode::ParseError, "partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const LRTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows)
    if (!row.empty()) rows.push_back(row);
  return Json{{"outer", to_json(t.shape.outer())}, {"inner", to_json(t.shape.inner())}, {"rows", rows}};
}

Json to_json(const SchurVector& v) {
  Json terms = Json::array();
  for (const auto& [p, c] : v.terms()) terms.push_back(Json{{"partition", to_json(p)}, {"coeff", c.get_str()}});
  return Json{{"nvars", v.nvars()}, {"mode", std::string(to_string(v.mode()))}, {"terms", terms}};
}

SchurVector schur_vector_from_json(const Json& j) {
  try {
    SchurVector v(j.at("nvars").get<int>(), parse_mode(j.at("mode").get<std::string>()));
    for (const auto& t : j.at("terms")) {
      Integer c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw SchurError(ErrorCode::ParseError, "bad coefficient");
      v.add_term(partition_from_json(t.at("partition")), c);
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw SchurError(ErrorCode::ParseError, e.what());
  }
}

namespace {

Json factors_json(const std::vector<Partition>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(to_json(f));
  return out;
}

}  // namespace

Json to_json(const DerivedExpansion& e) {
  Json base;
  if (e.polynomial) base = Json{{"polynomial", to_json(*e.polynomial)}};
  else if (e.factors.size() == 1) base = Json{{"lambda", to_json(e.factors.front())}};
  else base = Json{{"product", factors_json(e.factors)}};
  Json orders = Json::array();
  for (const auto& v : e.orders) orders.push_back(to_json(v));
  return Json{{"base", base}, {"nvars", e.nvars}, {"mode", std::string(to_string(e.mode))}, {"orders", orders}};
}

Json to_json(const DifferenceReport& r) {
  Json out{{"factors", factors_json(r.factors)}, {"i", r.order}, {"n", r.nvars},
           {"mode", std::string(to_string(r.mode))}, {"vector", to_json(r.vector)}, {"positive", r.positive}};
  if (r.witness) {
    out["witness_partition"] = to_json(r.witness->first);
    out["coeff"] = r.witness->second.get_str();
  }
  return out;
}

namespace {

Json star_terms(const std::vector<StarTerm>& terms, bool pair) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json item{{"j", t.j}};
    if (pair) item["k"] = t.k;
    item["removal"] = t.removal ? to_json(*t.removal) : Json(nullptr);
    item["coefficient"] = t.coefficient.get_str();
    item["vector"] = to_json(t.vector);
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace

Json to_json(const StarDecomposition& d) {
  return Json{{"lambda", to_json(d.lambda)},
              {"nvars", d.nvars},
              {"mode", std::string(to_string(d.mode))},
              {"typeI", star_terms(d.type1, true)},
              {"typeII", star_terms(d.type2, false)},
              {"typeIII", star_terms(d.type3, false)}};
}

Json to_json(const SweepReport& r, bool include_timing) {
  Json params{{"conjecture", r.params.conjecture},
              {"max_size", r.params.max_size},
              {"nvars", r.params.nvars.text()},
              {"mode", std::string(to_string(r.params.mode))}};
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) {
    Json item{{"lambda", to_json(c.factors.at(0))}};
    if (c.factors.size() > 1) item["mu"] = to_json(c.factors[1]);
    item["i"] = c.order;
    item["n"] = c.nvars;
    item["witness_partition"] = to_json(c.witness);
    item["coeff"] = c.coeff.get_str();
    cex.push_back(std::move(item));
  }
  Json out{{"params", params}, {"cells", r.cells}, {"counterexamples", cex}};
  if (include_timing) {
    out["elapsed_ms"] = r.elapsed_ms;
    out["stats"] = Json{{"lr_enumerations", r.stats.lr_enumerations},
                        {"lr_lookups", r.stats.lr_lookups},
                        {"lr_cache_size", r.stats.lr_cache_size}};
  }
  return out;
}

Json to_json(const MapReport& r) {
  Json alphas = Json::array();
  for (const auto& rec : r.records) {
    Json subcases = Json::object();
    for (const auto& [tag, count] : rec.subcases) subcases[std::string(to_string(tag))] = count;
    alphas.push_back(Json{{"alpha", to_json(rec.alpha)},
                          {"case", std::string(to_string(rec.tag))},
                          {"subcases", subcases},
                          {"source_count", rec.source_count},
                          {"target_count", rec.target_count},
                          {"max_fiber", rec.max_fiber}});
  }
  Json histogram = Json::object();
  for (const auto& [size, count] : r.fiber_histogram) histogram[std::to_string(size)] = count;
  Json out{{"family", std::string(to_string(r.family))}, {"k", r.k}};
  if (r.family == Family::Hook) out["l"] = r.l;
  out["alphas"] = alphas;
  out["fiber_histogram"] = histogram;
  out["max_fiber"] = r.max_fiber;
  out["membership_ok"] = r.membership_ok;
  out["fiber_ok"] = r.fiber_ok;
  out["count_ok"] = r.count_ok;
  out["vanishing_ok"] = r.vanishing_ok;
  out["violations"] = r.violations;
  return out;
}

}  // namespace schurlab
