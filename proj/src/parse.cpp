#include "sens/parse.hpp"

#include <charconv>
#include <string>

#include "sens/errors.hpp"

namespace sens {
namespace {

double parse_number(std::string_view text, std::string_view whole) {
  std::string buf(text);
  if (buf.empty()) throw SpecError("missing value in effect size '" + std::string(whole) + "'");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(buf, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != buf.size()) {
    throw SpecError("bad number '" + buf + "' in effect size '" + std::string(whole) + "'");
  }
  return v;
}

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw SpecError("bad dfs '" + std::string(text) + "' in effect size '" + std::string(whole) +
                    "'");
  }
  return v;
}

}  // namespace

EffectSize parse_effect_size(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw SpecError("effect size must be written metric=value, got '" + std::string(text) + "'");
  }
  std::string_view key = text.substr(0, eq);
  const double value = parse_number(text.substr(eq + 1), text);
  try {
    if (key == "r") return EffectSize::r(value);
    if (key == "d") return EffectSize::d(value);
    if (key == "w") return EffectSize::w(value);
    if (key == "f") return EffectSize::f(value);
    if (!key.empty() && (key.front() == 'V' || key.front() == 'v')) {
      std::string_view dfs = key.substr(1);
      if (dfs.size() >= 2 && dfs.front() == '(' && dfs.back() == ')') {
        dfs = dfs.substr(1, dfs.size() - 2);
      }
      if (dfs.empty()) throw SpecError("V needs its dfs, e.g. V2=0.21");
      return EffectSize::v(value, parse_integer(dfs, text));
    }
  } catch (const DomainError& e) {
    throw SpecError(std::string("invalid effect size '") + std::string(text) + "': " + e.what());
  }
  throw SpecError("unknown effect size metric '" + std::string(key) + "'");
}

TestSpec make_test_spec(std::string_view test, double sig, int tails,
                        std::optional<std::int64_t> df, std::optional<std::int64_t> groups) {
  if (tails != 1 && tails != 2) throw SpecError("tails must be 1 or 2");
  const Tails t = tails == 2 ? Tails::Two : Tails::One;
  TestSpec spec;
  if (test == "t2" || test == "t") {
    spec = TestSpec::t_two_sample(sig, t);
  } else if (test == "r") {
    spec = TestSpec::point_biserial(sig, t);
  } else if (test == "chi2") {
    if (!df) throw SpecError("chi2 needs --df");
    if (t == Tails::Two) throw SpecError("chi2 tests are one-tailed");
    spec = TestSpec::chi2_gof(*df, sig);
  } else if (test == "anova" || test == "F") {
    if (!groups) throw SpecError("anova needs --groups");
    if (t == Tails::Two) throw SpecError("F tests are one-tailed");
    spec = TestSpec::one_way_f(*groups, sig);
  } else {
    throw SpecError("unknown test '" + std::string(test) + "' (use t2, r, chi2 or anova)");
  }
  spec.validate();
  return spec;
}

}  // namespace sens
