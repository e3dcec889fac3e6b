#include "centlab/json_io.hpp"

namespace centlab {

using nlohmann::json;

const char* cpo_case_name(CpoCase c) {
  switch (c) {
    case CpoCase::PrimeOrder: return "prime-order";
    case CpoCase::PQCase: return "pq";
    case CpoCase::NotCpo: return "not-cpo";
    case CpoCase::Vacuous: return "vacuous";
  }
  return "?";
}

const char* verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Witness: return "witness";
    case IsoVerdict::Refuted: return "refuted";
    case IsoVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

json to_json(const Subgroup& s) { return json(s.elems); }

json to_json(const CentStats& s) {
  json multiset = json::array();
  for (auto [order, count] : s.order_multiset)
    multiset.push_back({{"order", order}, {"count", count}});
  json cents = json::array();
  for (const auto& c : s.cent_set) cents.push_back(to_json(c));
  return json{{"cent_count", s.cent_count},
              {"center_order", s.center_order},
              {"derived_order", s.derived_order},
              {"order_multiset", multiset},
              {"centralizers", cents}};
}

json to_json(const CpoVerdict& v) {
  json j{{"is_cpo", v.is_cpo}, {"case", cpo_case_name(v.kind)}};
  if (v.kind == CpoCase::PQCase) {
    j["p"] = v.p;
    j["q"] = v.q;
  } else if (v.kind == CpoCase::PrimeOrder) {
    j["p"] = v.p;
  }
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

json to_json(const IsomorphismWitness& w) { return json(w.mapping); }

json to_json(const IsoclinismWitness& w) {
  return json{{"phi", to_json(w.phi)}, {"psi", to_json(w.psi)}};
}

json to_json(const IsoclinismResult& r) {
  json j{{"verdict", verdict_name(r.verdict)}, {"reason", r.reason}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

json to_json(const CounterexampleReport& r) {
  auto side = [](const CatalogEntry& e) {
    return json{{"label", e.label},
                {"order", e.group.order()},
                {"cent_count", e.stats.cent_count},
                {"derived_order", e.stats.derived_order}};
  };
  return json{{"schema", kJsonSchemaVersion},
              {"left", side(r.left)},
              {"right", side(r.right)},
              {"cent_count", r.shared_cent_count},
              {"derived_order", r.shared_derived_order},
              {"refutation", r.refutation}};
}

json to_json(const FamilyResult& r) {
  json members = json::array();
  for (const auto& e : r.members)
    members.push_back({{"label", e.label},
                       {"order", e.group.order()},
                       {"cent_count", e.stats.cent_count},
                       {"derived_order", e.stats.derived_order},
                       {"cpo", to_json(e.cpo)}});
  json j{{"schema", kJsonSchemaVersion},
         {"p", r.p},
         {"applicable", r.applicable},
         {"complements", r.complements},
         {"members", members}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"checked", c.checked},
                      {"failures", c.failures}});
  return json{{"schema", kJsonSchemaVersion},
              {"all_pass", r.all_pass()},
              {"checks", checks}};
}

json cent_stats_json(const std::string& label, int order, const CentStats& s) {
  json j = to_json(s);
  j["schema"] = kJsonSchemaVersion;
  j["label"] = label;
  j["order"] = order;
  return j;
}

}  // namespace centlab
