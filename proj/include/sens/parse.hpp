#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sens/effect_size.hpp"
#include "sens/sensitiveness.hpp"

namespace sens {

// "d=0.5", "r=.3", "w=0.3", "f=0.25", "V2=0.21" or "V(2)=0.21".
// Throws SpecError on malformed input.
EffectSize parse_effect_size(std::string_view text);

// Test names: "t2" (independent groups), "r" (point-biserial), "chi2" (needs
// df), "anova" (needs groups). tails is 1 or 2.
TestSpec make_test_spec(std::string_view test, double sig = 0.05, int tails = 1,
                        std::optional<std::int64_t> df = {},
                        std::optional<std::int64_t> groups = {});

}  // namespace sens
