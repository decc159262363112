#include "sens/simulation.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "sens/distributions.hpp"
#include "sens/errors.hpp"

namespace sens {
namespace {

// Substream namespaces.
constexpr std::uint64_t kMacroStream = 0;
constexpr std::uint64_t kPopulationStream = 1;
constexpr std::uint64_t kSampleStream = 2;

struct Moments {
  double mean;
  double ss;  // sum of squared deviations
};

Moments moments(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, ss};
}

// k values chosen uniformly without replacement (partial Fisher-Yates).
std::vector<double> choose(std::span<const double> source, std::int64_t k, Rng& rng) {
  std::vector<double> pool(source.begin(), source.end());
  const auto n = static_cast<std::uint64_t>(pool.size());
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(k); ++i) {
    const std::uint64_t j = i + rng.below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

std::vector<Population> build_macro_populations(const SimulationConfig& config) {
  std::vector<Population> macros;
  macros.reserve(config.macro_pops.size());
  for (std::size_t i = 0; i < config.macro_pops.size(); ++i) {
    Rng rng = substream(config.seed, {kMacroStream, i});
    macros.push_back(generate_macro_population(config.macro_pops[i], rng));
  }
  return macros;
}

struct PopulationResult {
  GroupDescriptives descriptives;
  std::vector<SampleAssessment> samples;
};

}  // namespace

SimulationConfig SimulationConfig::paper_defaults() {
  SimulationConfig c;
  c.macro_pops = {{10000, 10.0, 10.5, 1.0},
                  {5000, 10.0, 10.5, 1.0},
                  {2000, 10.0, 10.5, 1.0},
                  {1000, 10.0, 10.5, 1.0}};
  // Studies I..VIII.
  c.extraction_plan = {{1, 2000}, {0, 2000}, {2, 1000}, {2, 200},
                       {3, 200},  {0, 1000}, {1, 500},  {3, 500}};
  c.n_studies = 8;
  c.pops_per_study = 43;
  c.conditions = {{"PWR", 102}, {"SNS", 48}, {"THMB", 30}};
  return c;
}

SimulationConfig SimulationConfig::desk_defaults() {
  SimulationConfig c = paper_defaults();
  for (auto& m : c.macro_pops) m.group_size = std::min<std::int64_t>(m.group_size, 2000);
  c.n_studies = 2;
  return c;
}

void SimulationConfig::validate() const {
  if (macro_pops.empty()) throw ConfigError("config: at least one macro-population is required");
  if (extraction_plan.empty()) throw ConfigError("config: extraction_plan is empty");
  if (conditions.empty()) throw ConfigError("config: at least one condition is required");
  if (n_studies < 1) throw ConfigError("config: n_studies must be >= 1");
  if (pops_per_study < 1) throw ConfigError("config: pops_per_study must be >= 1");
  if (!(sig > 0.0 && sig < 1.0)) throw ConfigError("config: sig must lie in (0, 1)");
  if (tails != Tails::One) throw ConfigError("config: the simulation runs one-tailed tests only");
  if (!std::isfinite(mes_threshold)) throw ConfigError("config: mes_threshold must be finite");
  for (std::size_t i = 0; i < macro_pops.size(); ++i) {
    const auto& m = macro_pops[i];
    if (m.group_size < 2) throw ConfigError("config: macro-population group_size must be >= 2");
    if (!(m.sd > 0.0) || !std::isfinite(m.mean1) || !std::isfinite(m.mean2)) {
      throw ConfigError("config: macro-population needs finite means and sd > 0");
    }
  }
  std::int64_t largest_condition_group = 0;
  for (const auto& cond : conditions) {
    if (cond.total_n < 4 || cond.total_n % 2 != 0) {
      throw ConfigError("config: condition " + cond.name +
                        " needs an even total sample size >= 4");
    }
    largest_condition_group = std::max(largest_condition_group, cond.total_n / 2);
  }
  for (const auto& e : extraction_plan) {
    if (e.macro_index >= macro_pops.size()) {
      throw ConfigError("config: extraction refers to macro-population " +
                        std::to_string(e.macro_index) + " which does not exist");
    }
    if (e.population_size < 2 || e.population_size % 2 != 0) {
      throw ConfigError("config: population sizes must be even and >= 2");
    }
    const std::int64_t per_group = e.population_size / 2;
    if (per_group > macro_pops[e.macro_index].group_size) {
      throw ConfigError("config: population of " + std::to_string(e.population_size) +
                        " exceeds macro-population " + std::to_string(e.macro_index));
    }
    if (largest_condition_group > per_group) {
      throw ConfigError("config: a condition sample of " +
                        std::to_string(2 * largest_condition_group) +
                        " exceeds the research population of " +
                        std::to_string(e.population_size));
    }
  }
}

TTestResult two_sample_t(std::span<const double> group_a, std::span<const double> group_b) {
  if (group_a.size() < 2 || group_b.size() < 2) {
    throw DomainError("two_sample_t: each group needs at least two observations");
  }
  const Moments a = moments(group_a);
  const Moments b = moments(group_b);
  const auto na = static_cast<double>(group_a.size());
  const auto nb = static_cast<double>(group_b.size());
  const auto df = static_cast<std::int64_t>(group_a.size() + group_b.size() - 2);
  const double pooled_var = (a.ss + b.ss) / static_cast<double>(df);
  if (!(pooled_var > 0.0)) throw DegenerateInputError("two_sample_t: zero pooled variance");
  const double t = (b.mean - a.mean) / std::sqrt(pooled_var * (1.0 / na + 1.0 / nb));
  TTestResult out;
  out.t = t;
  out.df = df;
  out.p_one_tailed = sf(StudentT(df), t);
  out.d = 2.0 * t / std::sqrt(static_cast<double>(df));
  return out;
}

Population generate_macro_population(const MacroPopulationSpec& spec, Rng& rng) {
  Population pop;
  pop.group1.resize(static_cast<std::size_t>(spec.group_size));
  pop.group2.resize(static_cast<std::size_t>(spec.group_size));
  for (auto& x : pop.group1) x = spec.mean1 + spec.sd * rng.normal();
  for (auto& x : pop.group2) x = spec.mean2 + spec.sd * rng.normal();
  return pop;
}

Population draw_subpopulation(const Population& source, std::int64_t total_size, Rng& rng) {
  const std::int64_t per_group = total_size / 2;
  if (total_size % 2 != 0 || per_group < 1) {
    throw ConfigError("draw_subpopulation: size must be even and positive");
  }
  if (per_group > static_cast<std::int64_t>(source.group1.size()) ||
      per_group > static_cast<std::int64_t>(source.group2.size())) {
    throw ConfigError("draw_subpopulation: requested size exceeds the source population");
  }
  Population out;
  out.group1 = choose(source.group1, per_group, rng);
  out.group2 = choose(source.group2, per_group, rng);
  return out;
}

GroupDescriptives describe(const Population& population) {
  const Moments a = moments(population.group1);
  const Moments b = moments(population.group2);
  const auto n1 = static_cast<std::int64_t>(population.group1.size());
  const auto n2 = static_cast<std::int64_t>(population.group2.size());
  GroupDescriptives d;
  d.n1 = n1;
  d.mean1 = a.mean;
  d.sd1 = std::sqrt(a.ss / static_cast<double>(n1 - 1));
  d.n2 = n2;
  d.mean2 = b.mean;
  d.sd2 = std::sqrt(b.ss / static_cast<double>(n2 - 1));
  d.d = (b.mean - a.mean) / std::sqrt((a.ss + b.ss) / static_cast<double>(n1 + n2 - 2));
  return d;
}

Rng sample_stream(std::uint64_t seed, int study, int population, std::size_t condition) {
  return substream(seed, {kSampleStream, static_cast<std::uint64_t>(study),
                          static_cast<std::uint64_t>(population), condition});
}

std::vector<SampleAssessment> evaluate_population(const Population& population,
                                                  const SimulationConfig& config, int study,
                                                  int population_index) {
  std::vector<SampleAssessment> out;
  out.reserve(config.conditions.size());
  for (std::size_t c = 0; c < config.conditions.size(); ++c) {
    Rng rng = sample_stream(config.seed, study, population_index, c);
    const Population sample = draw_subpopulation(population, config.conditions[c].total_n, rng);
    SampleAssessment a;
    a.test = two_sample_t(sample.group1, sample.group2);
    a.significant = a.test.p_one_tailed <= config.sig;
    a.captured = a.significant && a.test.d > config.mes_threshold;
    out.push_back(a);
  }
  return out;
}

std::vector<StudyOutcome> run_simulation(const SimulationConfig& config) {
  config.validate();
  const std::vector<Population> macros = build_macro_populations(config);

  const auto n_cells = static_cast<std::size_t>(config.n_studies) *
                       static_cast<std::size_t>(config.pops_per_study);
  std::vector<PopulationResult> cells(n_cells);

  auto work = [&](std::size_t cell) {
    const int study = static_cast<int>(cell / static_cast<std::size_t>(config.pops_per_study));
    const int pop = static_cast<int>(cell % static_cast<std::size_t>(config.pops_per_study));
    const Extraction& plan = config.extraction_plan[static_cast<std::size_t>(study) %
                                                    config.extraction_plan.size()];
    Rng rng = substream(config.seed, {kPopulationStream, static_cast<std::uint64_t>(study),
                                      static_cast<std::uint64_t>(pop)});
    const Population population =
        draw_subpopulation(macros[plan.macro_index], plan.population_size, rng);
    cells[cell].descriptives = describe(population);
    cells[cell].samples = evaluate_population(population, config, study, pop);
  };

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n_cells)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n_cells; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n_cells && !failed; i = next++) {
          try {
            work(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<StudyOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(config.n_studies));
  for (int s = 0; s < config.n_studies; ++s) {
    const Extraction& plan =
        config.extraction_plan[static_cast<std::size_t>(s) % config.extraction_plan.size()];
    StudyOutcome study;
    study.study_index = s;
    study.macro_index = plan.macro_index;
    study.population_size = plan.population_size;
    study.macro = describe(macros[plan.macro_index]);
    for (const auto& cond : config.conditions) study.counts.push_back({cond.name, 0, 0});
    for (int p = 0; p < config.pops_per_study; ++p) {
      const PopulationResult& cell =
          cells[static_cast<std::size_t>(s) * static_cast<std::size_t>(config.pops_per_study) +
                static_cast<std::size_t>(p)];
      study.population_descriptives.push_back(cell.descriptives);
      for (std::size_t c = 0; c < cell.samples.size(); ++c) {
        study.counts[c].captures += cell.samples[c].captured ? 1 : 0;
        study.counts[c].significant += cell.samples[c].significant ? 1 : 0;
      }
    }
    outcomes.push_back(std::move(study));
  }
  return outcomes;
}

}  // namespace sens
