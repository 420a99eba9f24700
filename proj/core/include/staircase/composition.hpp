#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace staircase {

// Weak composition: a finite sequence of nonnegative integers.
// Public indices are 1-based where the mathematics is; operator[] is 0-based.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);
  Composition(std::initializer_list<int> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  // 1-based accessor.
  int at(std::size_t i) const;
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  int weight() const;
  Composition reversed() const;
  // Exchange 1-based positions i and j.
  Composition swapped(std::size_t i, std::size_t j) const;
  Composition padded(std::size_t m) const;
  Composition sorted_decreasing() const;
  Composition sorted_increasing() const;
  bool is_weakly_decreasing() const;

  std::string to_string() const;  // "(2,3,1)"

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> entries_;
};

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // trailing zeros are dropped
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  // lambda_+ of length m (zero padded); throws if length() > m.
  Composition padded(std::size_t m) const;
  // All parts of padded(m) distinct.
  bool is_regular(std::size_t m) const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Partitions of exactly `weight` with at most `max_length` parts, in
// reverse lexicographic order.
std::vector<Partition> partitions_of(int weight, std::size_t max_length);

// "2,3,1" or "(2,3,1)" or "2 3 1". Empty string gives the empty sequence.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace staircase

template <>
struct std::hash<staircase::Composition> {
  std::size_t operator()(const staircase::Composition& c) const noexcept;
};
