#pragma once

// JSON forms of the public result types. Doubles are written with
// round-trip precision, so parse(serialize(x)) == x.

#include <json.hpp>

#include "sens/analysis.hpp"
#include "sens/power.hpp"
#include "sens/sensitiveness.hpp"
#include "sens/simulation.hpp"
#include "sens/tables.hpp"

namespace sens {

void to_json(nlohmann::json& j, const DegreesOfFreedom& v);
void from_json(const nlohmann::json& j, DegreesOfFreedom& v);

void to_json(nlohmann::json& j, const TestSpec& v);
void from_json(const nlohmann::json& j, TestSpec& v);

void to_json(nlohmann::json& j, const MesAtN& v);
void from_json(const nlohmann::json& j, MesAtN& v);

void to_json(nlohmann::json& j, const SensitivenessResult& v);
void from_json(const nlohmann::json& j, SensitivenessResult& v);

void to_json(nlohmann::json& j, const Noncentrality& v);
void from_json(const nlohmann::json& j, Noncentrality& v);

void to_json(nlohmann::json& j, const PowerResult& v);
void from_json(const nlohmann::json& j, PowerResult& v);

void to_json(nlohmann::json& j, const TableRow& v);
void from_json(const nlohmann::json& j, TableRow& v);

void to_json(nlohmann::json& j, const MacroPopulationSpec& v);
void from_json(const nlohmann::json& j, MacroPopulationSpec& v);

void to_json(nlohmann::json& j, const Extraction& v);
void from_json(const nlohmann::json& j, Extraction& v);

void to_json(nlohmann::json& j, const ConditionSpec& v);
void from_json(const nlohmann::json& j, ConditionSpec& v);

// Missing keys keep the value already held by `v`.
void to_json(nlohmann::json& j, const SimulationConfig& v);
void from_json(const nlohmann::json& j, SimulationConfig& v);

void to_json(nlohmann::json& j, const GroupDescriptives& v);
void from_json(const nlohmann::json& j, GroupDescriptives& v);

void to_json(nlohmann::json& j, const ConditionCount& v);
void from_json(const nlohmann::json& j, ConditionCount& v);

void to_json(nlohmann::json& j, const StudyOutcome& v);
void from_json(const nlohmann::json& j, StudyOutcome& v);

void to_json(nlohmann::json& j, const PairwiseComparison& v);
void from_json(const nlohmann::json& j, PairwiseComparison& v);

void to_json(nlohmann::json& j, const TTestResult& v);
void from_json(const nlohmann::json& j, TTestResult& v);

}  // namespace sens

template <>
struct nlohmann::adl_serializer<sens::EffectSize> {
  static void to_json(json& j, const sens::EffectSize& es);
  static sens::EffectSize from_json(const json& j);
};
