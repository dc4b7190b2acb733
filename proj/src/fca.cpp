#include "fcagen/fca.hpp"

#include <algorithm>

namespace fcagen {

namespace {

constexpr std::size_t kTableMaxAttributes = 16;

// Next closed set after `current` in lectic order for a closure operator on
// {0..n-1}, or false if `current` is the last one.
template <class Close>
bool next_closure(AttributeSet& current, std::size_t n, const Close& close) {
  for (std::size_t k = n; k-- > 0;) {
    if (current.contains(k)) continue;
    const AttributeSet prefix = current & AttributeSet::below(k);
    AttributeSet candidate = prefix;
    candidate.insert(k);
    const AttributeSet closed = close(candidate);
    if ((closed & AttributeSet::below(k)) == prefix) {
      current = closed;
      return true;
    }
  }
  return false;
}

std::vector<AttributeSet> by_size_then_bits(std::size_t n) {
  std::vector<AttributeSet> all;
  all.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) all.emplace_back(b);
  std::stable_sort(all.begin(), all.end(), [](AttributeSet a, AttributeSet b) { return a.size() < b.size(); });
  return all;
}

AttributeSet oracle_closure(const FormalContext& ctx, AttributeSet b) {
  return object_derivation(ctx, attribute_derivation(ctx, b));
}

void require_oracle_scale(const FormalContext& ctx) {
  if (ctx.attribute_count() > kBruteForceMaxAttributes) {
    throw ContractError("brute-force enumeration is limited to 12 attributes");
  }
}

}  // namespace

ContextClosure::ContextClosure(const FormalContext& ctx)
    : attribute_count_(ctx.attribute_count()), all_(ctx.all_attributes()) {
  if (attribute_count_ <= kTableMaxAttributes) {
    // table[S] starts as S for every row S and as M elsewhere; AND-ing over
    // supersets then leaves table[B] = intersection of rows containing B.
    const std::size_t size = std::size_t{1} << attribute_count_;
    table_.assign(size, all_);
    for (AttributeSet r : ctx.rows()) table_[r.bits()] = r;
    for (std::size_t bit = 0; bit < attribute_count_; ++bit) {
      const std::size_t mask = std::size_t{1} << bit;
      for (std::size_t b = 0; b < size; ++b) {
        if ((b & mask) == 0) table_[b] &= table_[b | mask];
      }
    }
  } else {
    distinct_rows_.assign(ctx.rows().begin(), ctx.rows().end());
    std::sort(distinct_rows_.begin(), distinct_rows_.end());
    distinct_rows_.erase(std::unique(distinct_rows_.begin(), distinct_rows_.end()), distinct_rows_.end());
  }
}

AttributeSet ContextClosure::operator()(AttributeSet b) const {
  if (!b.is_subset_of(all_)) throw ContractError("attribute index out of range");
  if (!table_.empty()) return table_[b.bits()];
  AttributeSet out = all_;
  for (AttributeSet r : distinct_rows_) {
    if (b.is_subset_of(r)) out &= r;
  }
  return out;
}

AttributeSet lin_closure(std::span<const Implication> implications, AttributeSet b) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Implication& imp : implications) {
      if (imp.premise.is_subset_of(b) && !imp.conclusion.is_subset_of(b)) {
        b |= imp.conclusion;
        changed = true;
      }
    }
  }
  return b;
}

std::vector<AttributeSet> enumerate_intents(const FormalContext& ctx) {
  const ContextClosure close(ctx);
  std::vector<AttributeSet> out;
  AttributeSet current = close(AttributeSet{});
  do {
    out.push_back(current);
  } while (next_closure(current, ctx.attribute_count(), close));
  return out;
}

ClosedSets enumerate_intents_and_pseudo_intents(const FormalContext& ctx) {
  // Next Closure over the implicational closure of the base found so far.
  // Every set it visits is either an intent or, when not closed in the
  // context, the next pseudo-intent in lectic order.
  const ContextClosure close(ctx);
  ClosedSets result;
  auto& base = result.canonical_base;
  const auto close_under_base = [&base](AttributeSet b) { return lin_closure(base, b); };

  AttributeSet current;
  do {
    const AttributeSet closed = close(current);
    if (closed == current) {
      result.intents.push_back(current);
    } else {
      result.pseudo_intents.push_back(current);
      base.push_back({current, closed});
    }
  } while (next_closure(current, ctx.attribute_count(), close_under_base));
  return result;
}

std::vector<AttributeSet> enumerate_pseudo_intents(const FormalContext& ctx) {
  return enumerate_intents_and_pseudo_intents(ctx).pseudo_intents;
}

IpiCoordinate ipi_coordinate(const FormalContext& ctx) {
  const ClosedSets sets = enumerate_intents_and_pseudo_intents(ctx);
  return {sets.intents.size(), sets.pseudo_intents.size()};
}

std::vector<AttributeSet> brute_force_intents(const FormalContext& ctx) {
  require_oracle_scale(ctx);
  std::vector<AttributeSet> out;
  for (AttributeSet b : by_size_then_bits(ctx.attribute_count())) {
    if (oracle_closure(ctx, b) == b) out.push_back(b);
  }
  return out;
}

std::vector<AttributeSet> brute_force_pseudo_intents(const FormalContext& ctx) {
  require_oracle_scale(ctx);
  // Visiting by cardinality means every Q strictly inside P is decided
  // before P.
  std::vector<AttributeSet> pseudo;
  for (AttributeSet p : by_size_then_bits(ctx.attribute_count())) {
    if (oracle_closure(ctx, p) == p) continue;
    const bool respects_smaller = std::all_of(pseudo.begin(), pseudo.end(), [&](AttributeSet q) {
      return !q.is_proper_subset_of(p) || oracle_closure(ctx, q).is_subset_of(p);
    });
    if (respects_smaller) pseudo.push_back(p);
  }
  return pseudo;
}

}  // namespace fcagen
