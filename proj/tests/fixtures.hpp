#pragma once

#include <initializer_list>
#include <string_view>

#include "fcagen/context.hpp"
#include "fcagen/generators.hpp"
#include "fcagen/random.hpp"

namespace fcagen::test {

/// Builds a context from rows written as "X.X." strings.
inline FormalContext from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<AttributeSet> sets;
  std::size_t width = 0;
  for (auto r : rows) {
    width = r.size();
    AttributeSet s;
    for (std::size_t m = 0; m < r.size(); ++m) {
      if (r[m] == 'X') s.insert(m);
    }
    sets.push_back(s);
  }
  return FormalContext::anonymous(width, std::move(sets));
}

/// Small random context with a random density, for property tests.
inline FormalContext random_context(Rng& rng, std::size_t max_objects, std::size_t attributes) {
  const auto objects = discrete_uniform(rng, 0, max_objects);
  return coin_toss_context(attributes, objects, uniform01(rng), rng);
}

}  // namespace fcagen::test
