#pragma once

#include <json.hpp>

#include "centlab/catalog.hpp"
#include "centlab/isoclinism.hpp"

namespace centlab {

/// All top-level CLI JSON payloads carry {"schema": 1}.
inline constexpr int kJsonSchemaVersion = 1;

nlohmann::json to_json(const Subgroup& s);
nlohmann::json to_json(const CentStats& s);
nlohmann::json to_json(const CpoVerdict& v);
nlohmann::json to_json(const IsomorphismWitness& w);
nlohmann::json to_json(const IsoclinismWitness& w);
nlohmann::json to_json(const IsoclinismResult& r);
nlohmann::json to_json(const CounterexampleReport& r);
nlohmann::json to_json(const FamilyResult& r);
nlohmann::json to_json(const VerificationReport& r);

/// The payload behind `cent <spec>`: stats plus the centralizer subgroups.
nlohmann::json cent_stats_json(const std::string& label, int order, const CentStats& s);

const char* cpo_case_name(CpoCase c);
const char* verdict_name(IsoVerdict v);

}  // namespace centlab
