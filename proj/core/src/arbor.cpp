#include "staircase/arbor.hpp"

#include <algorithm>
#include <string>

#include "staircase/error.hpp"

namespace staircase {

AntilinearizedPoset::AntilinearizedPoset(FinitePoset poset, std::vector<int> v, std::size_t m)
    : poset_(std::move(poset)), v_(std::move(v)), slot_(m), m_(m) {
  if (v_.size() != poset_.size()) throw ValidationError("one slot per element required");
  for (std::size_t s = 0; s < v_.size(); ++s) {
    const int k = v_[s];
    if (k < 1 || static_cast<std::size_t>(k) > m_)
      throw ValidationError("slot " + std::to_string(k) + " outside [1," + std::to_string(m_) + "]");
    if (slot_[k - 1]) throw ValidationError("slot " + std::to_string(k) + " used twice");
    slot_[k - 1] = s;
  }
  for (std::size_t s = 0; s < size(); ++s) {
    if (poset_.lower_covers(s).size() > 1)
      throw ValidationError("not arborescent: slot " + std::to_string(v_[s]) +
                            " has several lower covers");
    for (std::size_t t = 0; t < size(); ++t)
      if (above(s, t) && v_[s] > v_[t])
        throw ValidationError("not order-reversing: slot " + std::to_string(v_[s]) +
                              " is above slot " + std::to_string(v_[t]));
  }
  // v(s) < v(t) < v(r) and s > r force t > r.
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t s = 0; s < size(); ++s) {
      if (!above(s, r)) continue;
      for (int k = v_[s] + 1; k < v_[r]; ++k) {
        auto t = slot_[k - 1];
        if (t && !above(*t, r))
          throw ValidationError("inconsistent anti-linearization: triple (s,t,r) = (" +
                                std::to_string(v_[s]) + "," + std::to_string(k) + "," +
                                std::to_string(v_[r]) + ")");
      }
    }
}

AntilinearizedPoset AntilinearizedPoset::from_slots(std::size_t m, const std::vector<int>& slots,
                                                    const std::vector<std::pair<int, int>>& covers) {
  auto index = [&](int k) {
    auto it = std::find(slots.begin(), slots.end(), k);
    if (it == slots.end()) throw ValidationError("cover refers to unknown element " + std::to_string(k));
    return static_cast<std::size_t>(it - slots.begin());
  };
  std::vector<Relation> rel;
  for (auto [a, b] : covers) rel.push_back({index(a), index(b)});
  return AntilinearizedPoset(transitive_reduce(slots.size(), rel), slots, m);
}

std::optional<std::size_t> AntilinearizedPoset::at(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > m_) return std::nullopt;
  return slot_[k - 1];
}

std::size_t AntilinearizedPoset::count_upto(int k) const {
  return static_cast<std::size_t>(
      std::count_if(v_.begin(), v_.end(), [k](int x) { return x <= k; }));
}

namespace {
std::vector<int> flip(const std::vector<int>& h, std::size_t n) {
  std::vector<int> out;
  for (int x : h) out.push_back(static_cast<int>(n) - x + 1);
  return out;
}
}  // namespace

LinearizedPoset::LinearizedPoset(FinitePoset poset, std::vector<int> h, std::size_t n)
    : h_(h), flipped_(std::move(poset), flip(h, n), n) {}

std::optional<std::size_t> LinearizedPoset::at(int k) const {
  return flipped_.at(static_cast<int>(n()) - k + 1);
}

}  // namespace staircase
