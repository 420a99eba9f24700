#include "staircase/poset.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "staircase/error.hpp"

namespace staircase {

namespace {

std::string describe_cycle(std::size_t n, const std::vector<std::vector<std::size_t>>& succ) {
  // colour DFS; returns "a -> b -> ... -> a"
  std::vector<int> colour(n, 0);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [x, k] = stack.back();
      if (k < succ[x].size()) {
        std::size_t y = succ[x][k++];
        if (colour[y] == 1) {
          std::vector<std::size_t> cyc{y};
          for (std::size_t z = x; z != y; z = parent[z]) cyc.push_back(z);
          cyc.push_back(y);
          std::reverse(cyc.begin(), cyc.end());
          std::string out;
          for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += " -> ";
            out += std::to_string(cyc[i]);
          }
          return out;
        }
        if (colour[y] == 0) {
          colour[y] = 1;
          parent[y] = x;
          stack.push_back({y, 0});
        }
      } else {
        colour[x] = 2;
        stack.pop_back();
      }
    }
  }
  return "?";
}

}  // namespace

FinitePoset transitive_reduce(std::size_t n, const std::vector<Relation>& relations) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [x, y] : relations) {
    if (x >= n || y >= n) throw DomainError("relation refers to an element out of range");
    if (x == y) throw ValidationError("relation has a cycle: " + std::to_string(x) + " -> " + std::to_string(x));
    succ[x].push_back(y);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Kahn, smallest index first so the extension is deterministic.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& s : succ)
    for (std::size_t y : s) ++indeg[y];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (!indeg[x]) ready.push(x);
  FinitePoset p;
  p.n_ = n;
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    p.topo_.push_back(x);
    for (std::size_t y : succ[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (p.topo_.size() != n) throw ValidationError("relation has a cycle: " + describe_cycle(n, succ));

  p.words_ = (n + 63) / 64;
  p.leq_.assign(n * p.words_, 0);
  auto row = [&](std::size_t x) { return p.leq_.data() + x * p.words_; };
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    std::size_t x = *it;
    std::uint64_t* rx = row(x);
    rx[x / 64] |= std::uint64_t{1} << (x % 64);
    for (std::size_t y : succ[x]) {
      const std::uint64_t* ry = row(y);
      for (std::size_t w = 0; w < p.words_; ++w) rx[w] |= ry[w];
    }
  }

  // A direct successor y of x is a cover unless some other direct successor
  // already lies strictly below it.
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : succ[x]) {
      bool covered = true;
      for (std::size_t z : succ[x]) {
        if (z != y && p.leq(z, y)) {
          covered = false;
          break;
        }
      }
      if (covered) {
        p.covers_.push_back({x, y});
        p.up_[x].push_back(y);
        p.down_[y].push_back(x);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& d : p.down_) std::sort(d.begin(), d.end());
  return p;
}

bool FinitePoset::is_cover(std::size_t x, std::size_t y) const {
  return std::binary_search(up_[x].begin(), up_[x].end(), y);
}

std::optional<std::size_t> FinitePoset::cover_index(std::size_t x, std::size_t y) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), Relation{x, y});
  if (it == covers_.end() || *it != Relation{x, y}) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::vector<std::size_t> FinitePoset::interval(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t z : topo_)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t x = 0; x < n_; ++x) {
    bool all = true;
    for (std::size_t y = 0; y < n_ && all; ++y) all = leq(x, y);
    if (all) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t x = 0; x < n_; ++x) {
    bool all = true;
    for (std::size_t y = 0; y < n_ && all; ++y) all = leq(y, x);
    if (all) return x;
  }
  return std::nullopt;
}

bool is_bounded(const FinitePoset& p) {
  return p.size() > 0 && p.bottom().has_value() && p.top().has_value();
}

namespace {

// Shortest and longest cover-path length from x to every element above it.
void path_lengths(const FinitePoset& p, std::size_t x, std::vector<int>& shortest,
                  std::vector<int>& longest) {
  const std::size_t n = p.size();
  shortest.assign(n, -1);
  longest.assign(n, -1);
  shortest[x] = longest[x] = 0;
  for (std::size_t z : p.topological_order()) {
    if (shortest[z] < 0) continue;
    for (std::size_t w : p.upper_covers(z)) {
      if (shortest[w] < 0 || shortest[w] > shortest[z] + 1) shortest[w] = shortest[z] + 1;
      longest[w] = std::max(longest[w], longest[z] + 1);
    }
  }
}

}  // namespace

GradedReport graded_report(const FinitePoset& p) {
  GradedReport r;
  std::vector<int> lo, hi;
  for (std::size_t x : p.topological_order()) {
    path_lengths(p, x, lo, hi);
    for (std::size_t y : p.topological_order()) {
      if (lo[y] >= 0 && lo[y] != hi[y]) {
        r.graded = false;
        r.witness = Relation{x, y};
        r.shortest = lo[y];
        r.longest = hi[y];
        return r;
      }
    }
  }
  return r;
}

std::vector<int> rank(const FinitePoset& p) {
  if (!is_bounded(p)) throw DomainError("rank needs a bounded poset");
  if (!is_graded(p)) throw DomainError("rank needs a graded poset");
  std::vector<int> lo, hi;
  path_lengths(p, *p.bottom(), lo, hi);
  return hi;
}

ThinReport thin_report(const FinitePoset& p) {
  if (!is_graded(p)) throw DomainError("thinness is defined for graded posets only");
  ThinReport r;
  const std::size_t n = p.size();
  std::vector<std::size_t> middle(n);
  for (std::size_t x : p.topological_order()) {
    std::fill(middle.begin(), middle.end(), 0);
    for (std::size_t y : p.upper_covers(x))
      for (std::size_t z : p.upper_covers(y)) ++middle[z];
    for (std::size_t z : p.topological_order()) {
      if (middle[z] == 0) continue;
      if (middle[z] != 2 && r.thin) {
        r.thin = false;
        if (!r.witness) {
          r.witness = Relation{x, z};
          r.witness_middle = middle[z];
        }
      }
      if (middle[z] > 2 && r.subthin) {
        r.subthin = false;
        r.witness = Relation{x, z};
        r.witness_middle = middle[z];
      }
    }
  }
  return r;
}

MobiusTable::MobiusTable(const FinitePoset& p) : p_(&p), rows_(p.size()) {}

const std::vector<std::int64_t>& MobiusTable::row(std::size_t x) {
  auto& r = rows_[x];
  if (!r.empty() || p_->size() == 0) return r;
  const std::size_t n = p_->size();
  r.assign(n, 0);
  std::vector<std::size_t> seen;
  for (std::size_t z : p_->topological_order()) {
    if (!p_->leq(x, z)) continue;
    if (z == x) {
      r[z] = 1;
    } else {
      std::int64_t s = 0;
      for (std::size_t w : seen)
        if (p_->leq(w, z)) s += r[w];
      r[z] = -s;
    }
    seen.push_back(z);
  }
  return r;
}

std::int64_t MobiusTable::operator()(std::size_t x, std::size_t y) { return row(x)[y]; }

void MobiusTable::fill_all() {
  for (std::size_t x = 0; x < p_->size(); ++x) row(x);
}

std::int64_t mobius(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y)) return 0;
  MobiusTable t(p);
  return t(x, y);
}

std::int64_t mobius_via_chains(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y)) return 0;
  if (x == y) return 1;
  const std::vector<std::size_t> elems = p.interval(x, y);  // linear extension order
  const std::size_t len = elems.size();
  // chains[i][k] = number of chains x = x0 < ... < xk = elems[i]
  std::vector<std::vector<mpz_class>> chains(len, std::vector<mpz_class>(len, 0));
  chains[0][0] = 1;
  for (std::size_t i = 1; i < len; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (!p.less(elems[j], elems[i])) continue;
      for (std::size_t k = 0; k + 1 < len; ++k) chains[i][k + 1] += chains[j][k];
    }
  mpz_class total = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (k % 2) total -= chains[len - 1][k];
    else total += chains[len - 1][k];
  }
  return total.get_si();
}

ELReport is_el_labelling(const FinitePoset& p, const EdgeLabelling& e) {
  if (e.labels.size() != p.covers().size())
    throw DomainError("edge labelling does not match the Hasse diagram");
  const std::size_t n = p.size();
  auto label = [&](std::size_t a, std::size_t b) { return e.labels[*p.cover_index(a, b)]; };
  constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() / 4;

  ELReport r;
  std::vector<std::vector<std::int64_t>> best(n);
  std::vector<char> has_best(n);
  // first label of each increasing chain to y, with multiplicities
  std::vector<std::map<std::int64_t, std::uint64_t>> inc(n);
  const auto& topo = p.topological_order();
  for (std::size_t y : topo) {
    std::fill(has_best.begin(), has_best.end(), 0);
    for (auto& m : inc) m.clear();
    has_best[y] = 1;
    best[y].clear();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      std::size_t z = *it;
      if (z == y || !p.less(z, y)) continue;
      bool first = true;
      for (std::size_t w : p.upper_covers(z)) {
        if (!p.leq(w, y)) continue;
        std::int64_t l = label(z, w);
        std::vector<std::int64_t> word{l};
        word.insert(word.end(), best[w].begin(), best[w].end());
        if (first || word < best[z]) best[z] = std::move(word);
        first = false;
        std::uint64_t cnt = 0;
        if (w == y) {
          cnt = 1;
        } else {
          for (auto jt = inc[w].upper_bound(l); jt != inc[w].end(); ++jt)
            cnt = std::min(kCap, cnt + jt->second);
        }
        if (cnt) inc[z][l] = std::min(kCap, inc[z][l] + cnt);
      }
      has_best[z] = 1;
      std::uint64_t total = 0;
      for (auto& [l, c] : inc[z]) total = std::min(kCap, total + c);
      const auto& w = best[z];
      bool increasing = std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) == w.end();
      if (total != 1 || !increasing) {
        if (r.ok) {
          r.ok = false;
          r.witness = Relation{z, y};
          if (total != 1)
            r.reason = std::to_string(total) + " increasing maximal chains";
          else
            r.reason = "lexicographically first maximal chain is not increasing";
        }
      }
    }
    if (!r.ok) return r;
  }
  return r;
}

ELOrderSearch search_el_order(const FinitePoset& p, const std::vector<std::size_t>& label_ids,
                              std::size_t max_distinct) {
  ELOrderSearch r;
  std::size_t k = 0;
  for (std::size_t id : label_ids) k = std::max(k, id + 1);
  if (k > max_distinct) {
    r.complete = false;
    return r;
  }
  std::vector<std::size_t> rank(k);  // rank[id]
  for (std::size_t i = 0; i < k; ++i) rank[i] = i;
  EdgeLabelling e;
  e.labels.resize(label_ids.size());
  do {
    ++r.tried;
    for (std::size_t c = 0; c < label_ids.size(); ++c)
      e.labels[c] = static_cast<std::int64_t>(rank[label_ids[c]]);
    if (is_el_labelling(p, e).ok) {
      r.found = true;
      r.order.resize(k);
      for (std::size_t id = 0; id < k; ++id) r.order[rank[id]] = id;
      return r;
    }
  } while (std::next_permutation(rank.begin(), rank.end()));
  return r;
}

std::uint64_t count_linear_extensions(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 40) throw SizeLimitError("linear extension count guarded at 40 elements");
  if (n == 0) return 1;
  std::vector<std::uint64_t> below(n, 0);  // strict lower set as bitmask
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(y, x)) below[x] |= std::uint64_t{1} << y;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::function<std::uint64_t(std::uint64_t)> go = [&](std::uint64_t down) -> std::uint64_t {
    if (down == full) return 1;
    if (auto it = memo.find(down); it != memo.end()) return it->second;
    if (memo.size() > 5'000'000) throw SizeLimitError("too many down-sets");
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if (!(down & bit) && (below[x] & ~down) == 0) total += go(down | bit);
    }
    memo.emplace(down, total);
    return total;
  };
  return go(0);
}

namespace {
std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_dot(const FinitePoset& p, const std::vector<std::string>& names,
                   const DotOptions& options) {
  if (names.size() != p.size()) throw DomainError("one name per element required");
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return names[a] < names[b]; });

  std::ostringstream out;
  out << "digraph " << options.graph_name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t x : order) {
    out << "  " << quote(names[x]);
    if (!options.highlighted.empty() && options.highlighted[x])
      out << " [style=filled, fillcolor=orange]";
    out << ";\n";
  }
  std::vector<std::size_t> edges(p.covers().size());
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = i;
  std::sort(edges.begin(), edges.end(), [&](auto a, auto b) {
    const auto& [x1, y1] = p.covers()[a];
    const auto& [x2, y2] = p.covers()[b];
    return std::tie(names[x1], names[y1]) < std::tie(names[x2], names[y2]);
  });
  for (std::size_t i : edges) {
    const auto& [x, y] = p.covers()[i];
    out << "  " << quote(names[x]) << " -> " << quote(names[y]);
    if (!options.edge_labels.empty()) out << " [label=" << quote(options.edge_labels[i]) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace staircase
