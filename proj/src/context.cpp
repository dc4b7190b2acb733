#include "fcagen/context.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace fcagen {

std::vector<std::size_t> AttributeSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::string to_string(AttributeSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

ObjectSet::ObjectSet(std::size_t universe, std::initializer_list<std::size_t> indices) : ObjectSet(universe) {
  for (std::size_t i : indices) insert(i);
}

ObjectSet ObjectSet::full(std::size_t universe) {
  ObjectSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

void ObjectSet::insert(std::size_t i) {
  if (i >= universe_) throw ContractError("object index out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t ObjectSet::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> ObjectSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t b = words_[w]; b != 0; b &= b - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    }
  }
  return out;
}

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw ContractError(std::string("duplicate ") + what + " name '" + n + "'");
  }
}

std::vector<std::string> numbered(char prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  if (attributes_.empty()) throw ContractError("a context needs at least one attribute");
  if (attributes_.size() > kMaxAttributes) throw ContractError("at most 63 attributes are supported");
  if (objects_.size() != rows_.size()) throw ContractError("object name count differs from row count");
  const AttributeSet all = all_attributes();
  for (AttributeSet r : rows_) {
    if (!r.is_subset_of(all)) throw ContractError("incidence row wider than the attribute set");
  }
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");
}

FormalContext FormalContext::anonymous(std::size_t attribute_count, std::vector<AttributeSet> rows) {
  auto objects = numbered('g', rows.size());
  return FormalContext(std::move(objects), numbered('m', attribute_count), std::move(rows));
}

FormalContext FormalContext::contranominal(std::size_t n) {
  const AttributeSet all = AttributeSet::full(n);
  std::vector<AttributeSet> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(all - AttributeSet{i});
  return anonymous(n, std::move(rows));
}

FormalContext FormalContext::full(std::size_t object_count, std::size_t attribute_count) {
  return anonymous(attribute_count, std::vector<AttributeSet>(object_count, AttributeSet::full(attribute_count)));
}

AttributeSet FormalContext::row(std::size_t g) const {
  if (g >= rows_.size()) throw ContractError("object index out of range");
  return rows_[g];
}

FormalContext FormalContext::transposed() const {
  if (rows_.empty() || rows_.size() > kMaxAttributes) {
    throw ContractError("transposition needs between 1 and 63 objects");
  }
  std::vector<AttributeSet> cols(attributes_.size());
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    for (std::size_t m : rows_[g].indices()) cols[m].insert(g);
  }
  return FormalContext(attributes_, objects_, std::move(cols));
}

AttributeSet object_derivation(const FormalContext& ctx, const ObjectSet& objects) {
  if (objects.universe() != ctx.object_count()) throw ContractError("object set does not match the context");
  AttributeSet out = ctx.all_attributes();
  for (std::size_t g : objects.indices()) out &= ctx.row(g);
  return out;
}

ObjectSet attribute_derivation(const FormalContext& ctx, AttributeSet attributes) {
  if (!attributes.is_subset_of(ctx.all_attributes())) throw ContractError("attribute index out of range");
  ObjectSet out(ctx.object_count());
  const auto rows = ctx.rows();
  for (std::size_t g = 0; g < rows.size(); ++g) {
    if (attributes.is_subset_of(rows[g])) out.insert(g);
  }
  return out;
}

AttributeSet closure(const FormalContext& ctx, AttributeSet attributes) {
  if (!attributes.is_subset_of(ctx.all_attributes())) throw ContractError("attribute index out of range");
  AttributeSet out = ctx.all_attributes();
  for (AttributeSet r : ctx.rows()) {
    if (attributes.is_subset_of(r)) out &= r;
  }
  return out;
}

bool contains_full_contranominal(const FormalContext& ctx) {
  const AttributeSet all = ctx.all_attributes();
  std::uint64_t missing_seen = 0;
  for (AttributeSet r : ctx.rows()) {
    const AttributeSet missing = all - r;
    if (missing.size() == 1) missing_seen |= missing.bits();
  }
  return missing_seen == all.bits();
}

std::vector<std::size_t> row_sum_profile(const FormalContext& ctx) {
  std::vector<std::size_t> out;
  out.reserve(ctx.object_count());
  for (AttributeSet r : ctx.rows()) out.push_back(r.size());
  return out;
}

// --- Burmeister ---------------------------------------------------------

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* expected) {
    std::string line;
    if (!std::getline(in_, line)) throw ParseError(line_no_ + 1, std::string("unexpected end of input, expected ") + expected);
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::size_t parse_count(const std::string& text, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("expected decimal ") + what + ", got '" + text + "'");
  }
  return value;
}

}  // namespace

FormalContext read_burmeister(std::istream& in) {
  LineReader lines(in);
  if (lines.next("'B'") != "B") throw ParseError(1, "header must start with 'B'");
  lines.next("blank line or context name");
  const std::string object_line = lines.next("object count");
  const std::size_t objects = parse_count(object_line, lines.line_no(), "object count");
  const std::string attribute_line = lines.next("attribute count");
  const std::size_t attributes = parse_count(attribute_line, lines.line_no(), "attribute count");
  if (attributes == 0) throw ParseError(lines.line_no(), "attribute count must be at least 1");
  if (attributes > kMaxAttributes) throw ParseError(lines.line_no(), "at most 63 attributes are supported");
  if (!lines.next("blank line").empty()) throw ParseError(lines.line_no(), "expected blank line after counts");

  std::vector<std::string> object_names;
  object_names.reserve(objects);
  for (std::size_t i = 0; i < objects; ++i) object_names.push_back(lines.next("object name"));
  std::vector<std::string> attribute_names;
  attribute_names.reserve(attributes);
  for (std::size_t i = 0; i < attributes; ++i) attribute_names.push_back(lines.next("attribute name"));

  std::vector<AttributeSet> rows;
  rows.reserve(objects);
  for (std::size_t g = 0; g < objects; ++g) {
    const std::string row = lines.next("incidence row");
    if (row.size() != attributes) {
      throw ParseError(lines.line_no(), "row has " + std::to_string(row.size()) + " characters, expected " +
                                            std::to_string(attributes));
    }
    AttributeSet r;
    for (std::size_t m = 0; m < attributes; ++m) {
      const char c = row[m];
      if (c == 'X' || c == 'x') {
        r.insert(m);
      } else if (c != '.') {
        throw ParseError(lines.line_no(), std::string("illegal row character '") + c + "'");
      }
    }
    rows.push_back(r);
  }
  try {
    return FormalContext(std::move(object_names), std::move(attribute_names), std::move(rows));
  } catch (const ContractError& e) {
    throw ParseError(lines.line_no(), e.what());
  }
}

FormalContext read_burmeister(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_burmeister(in);
}

FormalContext read_burmeister_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return read_burmeister(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

void write_burmeister(std::ostream& out, const FormalContext& ctx) {
  out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
  for (const auto& n : ctx.object_names()) out << n << '\n';
  for (const auto& n : ctx.attribute_names()) out << n << '\n';
  std::string line(ctx.attribute_count(), '.');
  for (AttributeSet r : ctx.rows()) {
    for (std::size_t m = 0; m < line.size(); ++m) line[m] = r.contains(m) ? 'X' : '.';
    out << line << '\n';
  }
}

std::string write_burmeister(const FormalContext& ctx) {
  std::ostringstream out;
  write_burmeister(out, ctx);
  return std::move(out).str();
}

void write_burmeister_file(const std::string& path, const FormalContext& ctx) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_burmeister(out, ctx);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace fcagen
