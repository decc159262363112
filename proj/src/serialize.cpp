#include "sens/serialize.hpp"

#include "sens/errors.hpp"

using nlohmann::json;

namespace sens {
namespace {

Metric metric_from_string(const std::string& s) {
  if (s == "r") return Metric::R;
  if (s == "d") return Metric::D;
  if (s == "w") return Metric::W;
  if (s == "V") return Metric::V;
  if (s == "f") return Metric::F;
  throw SpecError("unknown metric '" + s + "'");
}

template <class T>
void read_if_present(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) it->get_to(out);
}

}  // namespace

void to_json(json& j, const DegreesOfFreedom& v) {
  j = json{{"df1", v.df1}};
  if (v.df2) j["df2"] = *v.df2;
}

void from_json(const json& j, DegreesOfFreedom& v) {
  j.at("df1").get_to(v.df1);
  v.df2.reset();
  if (auto it = j.find("df2"); it != j.end() && !it->is_null()) v.df2 = it->get<std::int64_t>();
}

void to_json(json& j, const TestSpec& v) {
  j = json::object();
  if (std::holds_alternative<TTwoSample>(v.family)) {
    j["family"] = "t2";
  } else if (std::holds_alternative<PointBiserialR>(v.family)) {
    j["family"] = "r";
  } else if (const auto* c = std::get_if<Chi2GoF>(&v.family)) {
    j["family"] = "chi2";
    j["df"] = c->df;
  } else {
    j["family"] = "anova";
    j["groups"] = std::get<OneWayF>(v.family).groups;
  }
  if (v.is_t_family()) j["tails"] = v.tails == Tails::Two ? 2 : 1;
  j["sig"] = v.sig;
}

void from_json(const json& j, TestSpec& v) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "t2") {
    v.family = TTwoSample{};
  } else if (family == "r") {
    v.family = PointBiserialR{};
  } else if (family == "chi2") {
    v.family = Chi2GoF{j.at("df").get<std::int64_t>()};
  } else if (family == "anova") {
    v.family = OneWayF{j.at("groups").get<std::int64_t>()};
  } else {
    throw SpecError("unknown test family '" + family + "'");
  }
  v.tails = j.value("tails", 1) == 2 ? Tails::Two : Tails::One;
  j.at("sig").get_to(v.sig);
}

void to_json(json& j, const MesAtN& v) {
  j = json{{"n", v.n},
           {"critical_value", v.critical_value},
           {"mes", v.mes},
           {"df", v.df},
           {"attainable", v.attainable}};
}

void from_json(const json& j, MesAtN& v) {
  j.at("n").get_to(v.n);
  j.at("critical_value").get_to(v.critical_value);
  v.mes = j.at("mes").get<EffectSize>();
  j.at("df").get_to(v.df);
  j.at("attainable").get_to(v.attainable);
}

void to_json(json& j, const SensitivenessResult& v) {
  j = json{{"n_min", v.n_min},
           {"critical_value", v.critical_value},
           {"achieved_mes", v.achieved_mes},
           {"df", v.df},
           {"at_df_floor", v.at_df_floor},
           {"equal_split", v.equal_split},
           {"two_tailed", v.two_tailed}};
}

void from_json(const json& j, SensitivenessResult& v) {
  j.at("n_min").get_to(v.n_min);
  j.at("critical_value").get_to(v.critical_value);
  v.achieved_mes = j.at("achieved_mes").get<EffectSize>();
  j.at("df").get_to(v.df);
  j.at("at_df_floor").get_to(v.at_df_floor);
  j.at("equal_split").get_to(v.equal_split);
  j.at("two_tailed").get_to(v.two_tailed);
}

void to_json(json& j, const Noncentrality& v) { j = v.value; }
void from_json(const json& j, Noncentrality& v) { j.get_to(v.value); }

void to_json(json& j, const PowerResult& v) {
  j = json{{"n", v.n},
           {"power", v.power},
           {"critical_value", v.critical_value},
           {"noncentrality", v.noncentrality},
           {"df", v.df}};
}

void from_json(const json& j, PowerResult& v) {
  j.at("n").get_to(v.n);
  j.at("power").get_to(v.power);
  j.at("critical_value").get_to(v.critical_value);
  j.at("noncentrality").get_to(v.noncentrality);
  j.at("df").get_to(v.df);
}

void to_json(json& j, const TableRow& v) {
  j = json{{"test_label", v.test_label},
           {"size", v.size},
           {"test", v.test},
           {"target_es", v.target_es},
           {"n_sns", v.n_sns},
           {"n_pwr", v.n_pwr},
           {"critical_value", v.critical_value},
           {"df", v.df},
           {"actual_es", v.actual_es}};
}

void from_json(const json& j, TableRow& v) {
  j.at("test_label").get_to(v.test_label);
  j.at("size").get_to(v.size);
  j.at("test").get_to(v.test);
  v.target_es = j.at("target_es").get<EffectSize>();
  j.at("n_sns").get_to(v.n_sns);
  j.at("n_pwr").get_to(v.n_pwr);
  j.at("critical_value").get_to(v.critical_value);
  j.at("df").get_to(v.df);
  v.actual_es = j.at("actual_es").get<EffectSize>();
}

void to_json(json& j, const MacroPopulationSpec& v) {
  j = json{{"group_size", v.group_size}, {"mean1", v.mean1}, {"mean2", v.mean2}, {"sd", v.sd}};
}

void from_json(const json& j, MacroPopulationSpec& v) {
  j.at("group_size").get_to(v.group_size);
  read_if_present(j, "mean1", v.mean1);
  read_if_present(j, "mean2", v.mean2);
  read_if_present(j, "sd", v.sd);
}

void to_json(json& j, const Extraction& v) {
  j = json{{"macro", v.macro_index}, {"population_size", v.population_size}};
}

void from_json(const json& j, Extraction& v) {
  if (j.is_array()) {
    if (j.size() != 2) throw ConfigError("extraction entries are [macro index, population size]");
    j.at(0).get_to(v.macro_index);
    j.at(1).get_to(v.population_size);
    return;
  }
  j.at("macro").get_to(v.macro_index);
  j.at("population_size").get_to(v.population_size);
}

void to_json(json& j, const ConditionSpec& v) { j = json{{"name", v.name}, {"n", v.total_n}}; }

void from_json(const json& j, ConditionSpec& v) {
  j.at("name").get_to(v.name);
  j.at("n").get_to(v.total_n);
}

void to_json(json& j, const SimulationConfig& v) {
  j = json{{"seed", v.seed},
           {"macro_pops", v.macro_pops},
           {"extraction_plan", v.extraction_plan},
           {"n_studies", v.n_studies},
           {"pops_per_study", v.pops_per_study},
           {"conditions", v.conditions},
           {"sig", v.sig},
           {"tails", v.tails == Tails::Two ? 2 : 1},
           {"mes_threshold", v.mes_threshold},
           {"threads", v.threads}};
}

void from_json(const json& j, SimulationConfig& v) {
  if (!j.is_object()) throw ConfigError("simulation config must be an object");
  if (auto it = j.find("seed"); it != j.end()) {
    // TOML integers are signed 64-bit; larger seeds may be given as strings.
    v.seed = it->is_string() ? std::stoull(it->get<std::string>()) : it->get<std::uint64_t>();
  }
  read_if_present(j, "macro_pops", v.macro_pops);
  read_if_present(j, "extraction_plan", v.extraction_plan);
  read_if_present(j, "n_studies", v.n_studies);
  read_if_present(j, "pops_per_study", v.pops_per_study);
  if (auto it = j.find("conditions"); it != j.end()) it->get_to(v.conditions);
  if (auto it = j.find("condition_ns"); it != j.end()) {
    v.conditions.clear();
    for (const auto& [name, n] : it->items()) v.conditions.push_back({name, n.get<std::int64_t>()});
  }
  read_if_present(j, "sig", v.sig);
  if (auto it = j.find("tails"); it != j.end()) {
    v.tails = it->get<int>() == 2 ? Tails::Two : Tails::One;
  }
  read_if_present(j, "mes_threshold", v.mes_threshold);
  read_if_present(j, "threads", v.threads);
}

void to_json(json& j, const GroupDescriptives& v) {
  j = json{{"n1", v.n1},       {"mean1", v.mean1}, {"sd1", v.sd1}, {"n2", v.n2},
           {"mean2", v.mean2}, {"sd2", v.sd2},     {"d", v.d}};
}

void from_json(const json& j, GroupDescriptives& v) {
  j.at("n1").get_to(v.n1);
  j.at("mean1").get_to(v.mean1);
  j.at("sd1").get_to(v.sd1);
  j.at("n2").get_to(v.n2);
  j.at("mean2").get_to(v.mean2);
  j.at("sd2").get_to(v.sd2);
  j.at("d").get_to(v.d);
}

void to_json(json& j, const ConditionCount& v) {
  j = json{{"name", v.name}, {"captures", v.captures}, {"significant", v.significant}};
}

void from_json(const json& j, ConditionCount& v) {
  j.at("name").get_to(v.name);
  j.at("captures").get_to(v.captures);
  j.at("significant").get_to(v.significant);
}

void to_json(json& j, const StudyOutcome& v) {
  j = json{{"study_index", v.study_index},
           {"macro_index", v.macro_index},
           {"population_size", v.population_size},
           {"macro", v.macro},
           {"counts", v.counts},
           {"population_descriptives", v.population_descriptives}};
}

void from_json(const json& j, StudyOutcome& v) {
  j.at("study_index").get_to(v.study_index);
  j.at("macro_index").get_to(v.macro_index);
  j.at("population_size").get_to(v.population_size);
  j.at("macro").get_to(v.macro);
  j.at("counts").get_to(v.counts);
  j.at("population_descriptives").get_to(v.population_descriptives);
}

void to_json(json& j, const PairwiseComparison& v) {
  j = json{{"label", v.label}, {"f1", v.f1}, {"f2", v.f2},
           {"chi2", v.chi2},   {"w", v.w},   {"p", v.p}};
}

void from_json(const json& j, PairwiseComparison& v) {
  j.at("label").get_to(v.label);
  j.at("f1").get_to(v.f1);
  j.at("f2").get_to(v.f2);
  j.at("chi2").get_to(v.chi2);
  j.at("w").get_to(v.w);
  j.at("p").get_to(v.p);
}

void to_json(json& j, const TTestResult& v) {
  j = json{{"t", v.t}, {"df", v.df}, {"p_one_tailed", v.p_one_tailed}, {"d", v.d}};
}

void from_json(const json& j, TTestResult& v) {
  j.at("t").get_to(v.t);
  j.at("df").get_to(v.df);
  j.at("p_one_tailed").get_to(v.p_one_tailed);
  j.at("d").get_to(v.d);
}

}  // namespace sens

void nlohmann::adl_serializer<sens::EffectSize>::to_json(json& j, const sens::EffectSize& es) {
  j = json{{"metric", sens::to_string(es.metric())}, {"value", es.value()}};
  if (es.metric() == sens::Metric::V) j["dfs"] = es.dfs();
}

sens::EffectSize nlohmann::adl_serializer<sens::EffectSize>::from_json(const json& j) {
  const sens::Metric metric = sens::metric_from_string(j.at("metric").get<std::string>());
  const double value = j.at("value").get<double>();
  const std::int64_t dfs = metric == sens::Metric::V ? j.at("dfs").get<std::int64_t>() : 0;
  return sens::EffectSize::of(metric, value, dfs);
}
