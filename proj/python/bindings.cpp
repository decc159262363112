#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "sens/analysis.hpp"
#include "sens/config.hpp"
#include "sens/distributions.hpp"
#include "sens/errors.hpp"
#include "sens/noncentral.hpp"
#include "sens/parse.hpp"
#include "sens/power.hpp"
#include "sens/sensitiveness.hpp"
#include "sens/serialize.hpp"
#include "sens/simulation.hpp"
#include "sens/tables.hpp"

namespace py = pybind11;
using namespace sens;

namespace {

DistributionParams distribution(const std::string& family, std::int64_t df1,
                                std::optional<std::int64_t> df2) {
  if (family == "t") return StudentT(df1);
  if (family == "chi2") return ChiSquare(df1);
  if (family == "F") {
    if (!df2) throw SpecError("F needs df2");
    return FisherF(df1, *df2);
  }
  throw SpecError("family must be 't', 'chi2' or 'F'");
}

std::optional<MetricSpec> metric_spec(const std::optional<std::string>& metric) {
  if (!metric) return std::nullopt;
  return parse_effect_size(*metric + "=0").spec();
}

// Results cross the boundary as JSON text; the Python side decodes it.
template <class T>
std::string dumps(const T& value) {
  return nlohmann::json(value).dump();
}

}  // namespace

PYBIND11_MODULE(_sensitiveness, m) {
  m.doc() = "Sensitiveness analysis: minimum sample sizes for significance";

  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);

  py::class_<EffectSize>(m, "EffectSize")
      .def(py::init(&parse_effect_size), py::arg("text"))
      .def_property_readonly("metric", [](const EffectSize& e) { return to_string(e.metric()); })
      .def_property_readonly("value", &EffectSize::value)
      .def_property_readonly("dfs", &EffectSize::dfs)
      .def_property_readonly("label", &EffectSize::label)
      .def("__eq__", [](const EffectSize& a, const EffectSize& b) { return a == b; })
      .def("__repr__", [](const EffectSize& e) {
        return "EffectSize('" + e.label() + "=" + py::repr(py::float_(e.value())).cast<std::string>() + "')";
      });

  py::class_<TestSpec>(m, "TestSpec")
      .def(py::init(&make_test_spec), py::arg("test"), py::arg("sig") = 0.05, py::arg("tails") = 1,
           py::arg("df") = py::none(), py::arg("groups") = py::none())
      .def_readonly("sig", &TestSpec::sig)
      .def_property_readonly("two_tailed", &TestSpec::two_tailed)
      .def_property_readonly("label", &TestSpec::label)
      .def_property_readonly("df_floor", &TestSpec::df_floor)
      .def("__eq__", [](const TestSpec& a, const TestSpec& b) { return a == b; })
      .def("__repr__", [](const TestSpec& t) { return "TestSpec(" + dumps(t) + ")"; });

  m.def("_mes_at_n",
        [](const TestSpec& spec, std::int64_t n, const std::optional<std::string>& metric) {
          return dumps(mes_at_n(spec, n, metric_spec(metric)));
        },
        py::arg("spec"), py::arg("n"), py::arg("metric") = py::none());
  m.def("_min_sample_size",
        [](const TestSpec& spec, const EffectSize& target, std::optional<int> decimals) {
          return dumps(min_sample_size(spec, target, SolveOptions{decimals}));
        },
        py::arg("spec"), py::arg("target"), py::arg("report_decimals") = py::none());
  m.def("post_hoc_sensitiveness", &post_hoc_sensitiveness, py::arg("n_actual"), py::arg("n_min"),
        "100 * (n_actual / n_min - 1)");

  m.def("power_at_n",
        [](const TestSpec& spec, const EffectSize& es, std::int64_t n) {
          PowerSpec ps{spec, es};
          ps.validate();
          return power_at_n(ps, n);
        },
        py::arg("spec"), py::arg("es"), py::arg("n"));
  m.def("_min_n_for_power",
        [](const TestSpec& spec, const EffectSize& es, double power, const std::string& allocation) {
          if (allocation != "balanced" && allocation != "unrestricted") {
            throw SpecError("allocation must be 'balanced' or 'unrestricted'");
          }
          const PowerSpec ps{spec, es, power};
          return dumps(min_n_for_power(
              ps, allocation == "balanced" ? Allocation::Balanced : Allocation::Unrestricted));
        },
        py::arg("spec"), py::arg("es"), py::arg("power") = 0.8,
        py::arg("allocation") = "balanced");

  m.def("_generate_table2", [] { return dumps(generate_table2()); });
  m.def("_generate_supp_table2", [] { return dumps(generate_supp_table2()); });

  m.def("_pairwise_gof",
        [](std::int64_t f1, std::int64_t f2, const std::string& label) {
          return dumps(pairwise_gof(f1, f2, label));
        },
        py::arg("f1"), py::arg("f2"), py::arg("label") = "");

  m.def("_run_simulation",
        [](const std::string& config_json, bool paper_scale) {
          const SimulationConfig base =
              paper_scale ? SimulationConfig::paper_defaults() : SimulationConfig::desk_defaults();
          const SimulationConfig config =
              parse_simulation_config(config_json, ConfigFormat::Json, base);
          std::vector<StudyOutcome> outcomes;
          {
            py::gil_scoped_release release;
            outcomes = run_simulation(config);
          }
          return nlohmann::json{{"config", config},
                                {"outcomes", outcomes},
                                {"comparison_markdown", comparison_table_markdown(outcomes)}}
              .dump();
        },
        py::arg("config_json"), py::arg("paper_scale") = false);

  m.def("cdf",
        [](const std::string& family, double x, std::int64_t df1, std::optional<std::int64_t> df2) {
          return cdf(distribution(family, df1, df2), x);
        },
        py::arg("family"), py::arg("x"), py::arg("df1"), py::arg("df2") = py::none());
  m.def("sf",
        [](const std::string& family, double x, std::int64_t df1, std::optional<std::int64_t> df2) {
          return sf(distribution(family, df1, df2), x);
        },
        py::arg("family"), py::arg("x"), py::arg("df1"), py::arg("df2") = py::none());
  m.def("quantile",
        [](const std::string& family, double p, std::int64_t df1, std::optional<std::int64_t> df2) {
          return quantile(distribution(family, df1, df2), p);
        },
        py::arg("family"), py::arg("p"), py::arg("df1"), py::arg("df2") = py::none());
  m.def("noncentral_cdf",
        [](const std::string& family, double x, double nc, std::int64_t df1,
           std::optional<std::int64_t> df2) {
          return noncentral_cdf(distribution(family, df1, df2), Noncentrality{nc}, x);
        },
        py::arg("family"), py::arg("x"), py::arg("nc"), py::arg("df1"), py::arg("df2") = py::none());
}
