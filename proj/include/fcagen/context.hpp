#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcagen/error.hpp"

namespace fcagen {

/// Attribute sets live in one machine word, which caps |M|.
inline constexpr std::size_t kMaxAttributes = 63;

/// A subset of {0, ..., |M|-1}. Bit i set means attribute i is present.
///
/// Attribute index 0 is the smallest element of the lectic order used by
/// enumeration.
class AttributeSet {
 public:
  constexpr AttributeSet() noexcept = default;
  constexpr explicit AttributeSet(std::uint64_t bits) noexcept : bits_(bits) {}

  AttributeSet(std::initializer_list<std::size_t> indices) {
    for (std::size_t i : indices) insert(i);
  }

  /// {0, ..., n-1}
  static constexpr AttributeSet full(std::size_t n) noexcept {
    return AttributeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  /// {0, ..., i-1}; used to compare prefixes in lectic order.
  static constexpr AttributeSet below(std::size_t i) noexcept { return full(i); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t i) const noexcept { return i < 64 && ((bits_ >> i) & 1U); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  void insert(std::size_t i) {
    if (i >= kMaxAttributes) throw ContractError("attribute index out of range");
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) noexcept {
    if (i < 64) bits_ &= ~(std::uint64_t{1} << i);
  }

  constexpr bool is_subset_of(AttributeSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(AttributeSet other) const noexcept {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  /// Highest index present plus one, or 0 for the empty set.
  constexpr std::size_t extent() const noexcept { return 64 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<std::size_t> indices() const;

  friend constexpr AttributeSet operator|(AttributeSet a, AttributeSet b) noexcept { return AttributeSet(a.bits_ | b.bits_); }
  friend constexpr AttributeSet operator&(AttributeSet a, AttributeSet b) noexcept { return AttributeSet(a.bits_ & b.bits_); }
  friend constexpr AttributeSet operator-(AttributeSet a, AttributeSet b) noexcept { return AttributeSet(a.bits_ & ~b.bits_); }
  AttributeSet& operator|=(AttributeSet o) noexcept { bits_ |= o.bits_; return *this; }
  AttributeSet& operator&=(AttributeSet o) noexcept { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(AttributeSet, AttributeSet) noexcept = default;
  /// Integer order on the bit pattern; handy for sorting, not the lectic order.
  friend constexpr auto operator<=>(AttributeSet a, AttributeSet b) noexcept { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lectic order: a < b iff the smallest attribute on which they differ is in b.
constexpr bool lectic_less(AttributeSet a, AttributeSet b) noexcept {
  const std::uint64_t diff = a.bits() ^ b.bits();
  return diff != 0 && (b.bits() & (diff & (~diff + 1))) != 0;
}

std::string to_string(AttributeSet s);

/// A subset of object indices, sized to |G| of the owning context.
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  ObjectSet(std::size_t universe, std::initializer_list<std::size_t> indices);

  static ObjectSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U);
  }
  void insert(std::size_t i);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<std::size_t> indices() const;

  friend bool operator==(const ObjectSet&, const ObjectSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// The cross table (G, M, I). Immutable once built.
///
/// Duplicate rows are allowed and kept: generators draw objects
/// independently and never deduplicate.
class FormalContext {
 public:
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttributeSet> rows);

  /// Names objects "g<i>" and attributes "m<j>".
  static FormalContext anonymous(std::size_t attribute_count, std::vector<AttributeSet> rows);

  /// ([n], [n], !=): object i has every attribute except i.
  static FormalContext contranominal(std::size_t n);

  /// Every object has every attribute.
  static FormalContext full(std::size_t object_count, std::size_t attribute_count);

  std::size_t object_count() const noexcept { return rows_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  AttributeSet all_attributes() const noexcept { return AttributeSet::full(attribute_count()); }

  AttributeSet row(std::size_t g) const;
  std::span<const AttributeSet> rows() const noexcept { return rows_; }
  const std::string& object_name(std::size_t g) const { return objects_.at(g); }
  const std::string& attribute_name(std::size_t m) const { return attributes_.at(m); }
  std::span<const std::string> object_names() const noexcept { return objects_; }
  std::span<const std::string> attribute_names() const noexcept { return attributes_; }

  /// Swaps the roles of objects and attributes. Needs |G| in [1, 63].
  FormalContext transposed() const;

  friend bool operator==(const FormalContext&, const FormalContext&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
};

/// A' : attributes shared by every object in A. The empty set maps to M.
AttributeSet object_derivation(const FormalContext& ctx, const ObjectSet& objects);

/// B' : objects having every attribute in B. The empty set maps to G.
ObjectSet attribute_derivation(const FormalContext& ctx, AttributeSet attributes);

/// B''
AttributeSet closure(const FormalContext& ctx, AttributeSet attributes);

/// True iff every co-singleton M \ {m} occurs as a row, i.e. the context
/// contains a contranominal scale of size |M|.
bool contains_full_contranominal(const FormalContext& ctx);

/// Number of attributes per object, in object order.
std::vector<std::size_t> row_sum_profile(const FormalContext& ctx);

// Burmeister .cxt interchange. Output uses LF line endings exactly.
FormalContext read_burmeister(std::istream& in);
FormalContext read_burmeister(std::string_view text);
FormalContext read_burmeister_file(const std::string& path);
void write_burmeister(std::ostream& out, const FormalContext& ctx);
std::string write_burmeister(const FormalContext& ctx);
void write_burmeister_file(const std::string& path, const FormalContext& ctx);

}  // namespace fcagen
