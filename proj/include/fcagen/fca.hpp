#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "fcagen/context.hpp"

namespace fcagen {

/// (number of intents, number of pseudo-intents)
struct IpiCoordinate {
  std::uint64_t intents = 0;
  std::uint64_t pseudo_intents = 0;

  friend auto operator<=>(const IpiCoordinate&, const IpiCoordinate&) = default;
};

struct Implication {
  AttributeSet premise;
  AttributeSet conclusion;

  friend bool operator==(const Implication&, const Implication&) = default;
};

/// B -> B'' for a fixed context, evaluated in O(1) per call once built.
///
/// Up to 16 attributes the closure of every subset is tabulated with a
/// superset AND-transform; above that it scans the distinct rows.
class ContextClosure {
 public:
  explicit ContextClosure(const FormalContext& ctx);

  AttributeSet operator()(AttributeSet b) const;
  AttributeSet all() const noexcept { return all_; }
  std::size_t attribute_count() const noexcept { return attribute_count_; }

 private:
  std::size_t attribute_count_;
  AttributeSet all_;
  std::vector<AttributeSet> table_;
  std::vector<AttributeSet> distinct_rows_;
};

/// Smallest superset of `b` that respects every implication.
AttributeSet lin_closure(std::span<const Implication> implications, AttributeSet b);

/// All intents, each once, in lectic order (Next Closure).
std::vector<AttributeSet> enumerate_intents(const FormalContext& ctx);

/// Intents and pseudo-intents from one lectic pass, plus the implications
/// P -> P'' collected for every pseudo-intent P (the canonical base).
struct ClosedSets {
  std::vector<AttributeSet> intents;
  std::vector<AttributeSet> pseudo_intents;
  std::vector<Implication> canonical_base;
};

ClosedSets enumerate_intents_and_pseudo_intents(const FormalContext& ctx);

/// Pseudo-intents in lectic order.
std::vector<AttributeSet> enumerate_pseudo_intents(const FormalContext& ctx);

IpiCoordinate ipi_coordinate(const FormalContext& ctx);

// Reference implementations straight from the definitions; exponential in
// |M|, guarded to |M| <= 12. Results are sorted by (cardinality, bits).
inline constexpr std::size_t kBruteForceMaxAttributes = 12;
std::vector<AttributeSet> brute_force_intents(const FormalContext& ctx);
std::vector<AttributeSet> brute_force_pseudo_intents(const FormalContext& ctx);

}  // namespace fcagen
