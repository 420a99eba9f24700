#include "staircase/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "staircase/error.hpp"

namespace staircase {

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("composition entries must be nonnegative");
  }
}

Composition::Composition(std::initializer_list<int> entries)
    : Composition(std::vector<int>(entries)) {}

int Composition::at(std::size_t i) const {
  if (i == 0 || i > entries_.size()) throw DomainError("composition index out of range");
  return entries_[i - 1];
}

int Composition::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

Composition Composition::reversed() const {
  Composition out = *this;
  std::reverse(out.entries_.begin(), out.entries_.end());
  return out;
}

Composition Composition::swapped(std::size_t i, std::size_t j) const {
  Composition out = *this;
  std::swap(out.entries_.at(i - 1), out.entries_.at(j - 1));
  return out;
}

Composition Composition::padded(std::size_t m) const {
  if (m < entries_.size()) throw DomainError("cannot pad composition to a shorter length");
  Composition out = *this;
  out.entries_.resize(m, 0);
  return out;
}

Composition Composition::sorted_decreasing() const {
  Composition out = *this;
  std::sort(out.entries_.begin(), out.entries_.end(), std::greater<>());
  return out;
}

Composition Composition::sorted_increasing() const {
  Composition out = *this;
  std::sort(out.entries_.begin(), out.entries_.end());
  return out;
}

bool Composition::is_weakly_decreasing() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (int p : parts_) {
    if (p <= 0) throw DomainError("partition parts must be positive");
  }
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
    throw DomainError("partition must be weakly decreasing");
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Partition::padded(std::size_t m) const {
  if (parts_.size() > m)
    throw DomainError("partition " + to_string() + " has more than " + std::to_string(m) +
                      " parts");
  std::vector<int> v = parts_;
  v.resize(m, 0);
  return Composition(std::move(v));
}

bool Partition::is_regular(std::size_t m) const {
  const Composition c = padded(m);
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

std::string Partition::to_string() const { return Composition(parts_).to_string(); }

namespace {
void partitions_rec(int remaining, int max_part, std::size_t max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_length, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int weight, std::size_t max_length) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> cur;
  partitions_rec(weight, weight, max_length, cur, out);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '(' || c == ')' || c == '[' || c == ']'; };
  while (i < n) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !is_sep(text[j])) ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j)
      throw ParseError("not an integer: '" + text.substr(i, j - i) + "'");
    if (value < 0) throw ParseError("negative entry: " + std::to_string(value));
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace staircase

std::size_t std::hash<staircase::Composition>::operator()(
    const staircase::Composition& c) const noexcept {
  std::size_t h = c.size();
  for (int e : c) h = h * 1000003u ^ static_cast<std::size_t>(e + 0x9e37);
  return h;
}
