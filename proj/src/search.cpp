// Copyright 2026 The sft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sft/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace sft {

SearchLimits SearchLimits::defaults_for(const IntMatrix& a,
                                        const IntMatrix& b) {
  SearchLimits l;
  l.max_matrix_size = std::max(a.rows(), b.rows());
  l.max_entry = std::max<Integer>({a.max_entry(), b.max_entry(), Integer(1)});
  return l;
}

void SearchLimits::validate() const {
  if (max_matrix_size == 0 || max_depth == 0 || max_nodes == 0 ||
      max_entry <= 0 || threads == 0) {
    throw DomainError("search limits must all be positive");
  }
}

// ---------------------------------------------------------------------------
// Canonical keys

namespace {

using Signature = std::tuple<Integer, IntVector, IntVector>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const IntMatrix& m) : m_(m), n_(m.rows()) {
    std::vector<Signature> sig(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      IntVector r = m.row(v), c = m.col(v);
      std::sort(r.begin(), r.end());
      std::sort(c.begin(), c.end());
      sig[v] = {m(v, v), std::move(r), std::move(c)};
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    cls_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      cls_[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
      slot_cls_.push_back(cls_[v]);
    }
    std::sort(slot_cls_.begin(), slot_cls_.end());
  }

  std::vector<std::size_t> run() {
    perm_.assign(n_, 0);
    used_.assign(n_, false);
    current_.clear();
    dfs(0, false);
    return best_perm_;
  }

 private:
  // Returns the entries contributed by position k.
  void shell(std::size_t k, IntVector& out) const {
    const std::size_t v = perm_[k];
    for (std::size_t j = 0; j <= k; ++j) out.push_back(m_(v, perm_[j]));
    for (std::size_t i = 0; i < k; ++i) out.push_back(m_(perm_[i], v));
  }

  int compare_range(std::size_t begin, std::size_t len) const {
    for (std::size_t i = begin; i < begin + len; ++i) {
      if (current_[i] < best_[i]) return -1;
      if (best_[i] < current_[i]) return 1;
    }
    return 0;
  }

  void dfs(std::size_t k, bool strictly_less) {
    if (k == n_) {
      if (best_perm_.empty() || strictly_less) {
        best_ = current_;
        best_perm_ = perm_;
      }
      return;
    }
    const std::size_t begin = k * k;  // shells 0..k-1 hold k*k entries
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || cls_[v] != slot_cls_[k]) continue;
      perm_[k] = v;
      current_.resize(begin);
      shell(k, current_);
      bool less = strictly_less;
      if (!less && !best_perm_.empty()) {
        const int cmp = compare_range(begin, 2 * k + 1);
        if (cmp > 0) continue;
        less = cmp < 0;
      }
      used_[v] = true;
      dfs(k + 1, less);
      used_[v] = false;
    }
  }

  const IntMatrix& m_;
  std::size_t n_;
  std::vector<std::size_t> cls_;
  std::vector<std::size_t> slot_cls_;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
  IntVector current_;
  IntVector best_;
  std::vector<std::size_t> best_perm_;
};

}  // namespace

Canonical canonicalize(const IntMatrix& m) {
  require_square(m, "canonicalize");
  PermWitness w{Canonicalizer(m).run()};
  IntMatrix c = w.apply(m);
  std::string text = std::to_string(c.rows()) + ":";
  for (const auto& x : c.entries()) {
    text += x.str();
    text += ',';
  }
  return Canonical{CanonicalKey{c.rows(), std::move(text)}, std::move(c),
                   std::move(w)};
}

// ---------------------------------------------------------------------------
// Neighbors

namespace {

// All ways to write `total` as an ordered sum of `parts` values in [0, cap].
void compositions(const Integer& total, std::size_t parts, const Integer& cap,
                  IntVector& prefix, std::vector<IntVector>& out) {
  if (parts == 1) {
    if (total <= cap) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const Integer hi = std::min(total, cap);
  for (Integer x = 0; x <= hi; ++x) {
    prefix.push_back(x);
    compositions(total - x, parts - 1, cap, prefix, out);
    prefix.pop_back();
  }
}

// Unordered splittings of `remaining` into `parts` nonzero vectors, emitted
// in nonincreasing lexicographic order so each multiset appears once.
void vector_partitions(const IntVector& remaining, std::size_t parts,
                       const IntVector* upper, std::vector<IntVector>& prefix,
                       std::vector<std::vector<IntVector>>& out) {
  auto nonzero = [](const IntVector& v) {
    return std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  };
  if (parts == 1) {
    if (nonzero(remaining) && (!upper || remaining <= *upper)) {
      prefix.push_back(remaining);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const std::size_t n = remaining.size();
  IntVector v(n, Integer(0));
  // Odometer over 0 <= v <= remaining.
  while (true) {
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (v[j] < remaining[j]) {
        ++v[j];
        for (std::size_t t = j + 1; t < n; ++t) v[t] = 0;
        break;
      }
      if (j == 0) return;
    }
    if (!upper || v <= *upper) {
      IntVector rest(n);
      for (std::size_t t = 0; t < n; ++t) rest[t] = remaining[t] - v[t];
      if (nonzero(rest)) {
        const IntVector bound = v;
        prefix.push_back(v);
        vector_partitions(rest, parts - 1, &bound, prefix, out);
        prefix.pop_back();
      }
    }
  }
}

// Set partitions of `items` as restricted growth strings.
void set_partitions(const std::vector<std::size_t>& items, std::size_t idx,
                    std::vector<std::vector<std::size_t>>& blocks,
                    std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (idx == items.size()) {
    out.push_back(blocks);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(items[idx]);
    set_partitions(items, idx + 1, blocks, out);
    blocks[b].pop_back();
  }
  blocks.push_back({items[idx]});
  set_partitions(items, idx + 1, blocks, out);
  blocks.pop_back();
}

void add_amalgamations(const IntMatrix& a, const SearchLimits& limits,
                       std::vector<Move>& out) {
  for (const auto& cls : identical_column_classes(a)) {
    if (cls.size() < 2 || cls.size() > 20) continue;
    const std::size_t subsets = std::size_t{1} << cls.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::size_t> group;
      for (std::size_t t = 0; t < cls.size(); ++t)
        if (mask >> t & 1) group.push_back(cls[t]);
      if (group.size() < 2) continue;
      AmalgamationResult r = amalgamate(a, {group});
      if (r.smaller.max_entry() > limits.max_entry) continue;
      out.push_back(Move{OutamalgamationMove{r.d, r.e}, a, r.smaller});
    }
  }
}

void add_outsplits(const IntMatrix& a, const SearchLimits& limits,
                   std::vector<Move>& out) {
  const std::size_t n = a.rows();
  if (n >= limits.max_matrix_size) return;
  const std::size_t max_parts = limits.max_matrix_size - n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 2; p <= max_parts; ++p) {
      std::vector<IntVector> prefix;
      std::vector<std::vector<IntVector>> splits;
      vector_partitions(a.row(i), p, nullptr, prefix, splits);
      for (auto& parts : splits) {
        OutsplitSpec spec = OutsplitSpec::trivial(a);
        spec.parts[i] = std::move(parts);
        SplitResult r = apply_outsplit(a, spec);
        out.push_back(Move{OutsplitMove{r.d, r.e}, a, r.b});
      }
    }
  }
}

void add_balanced(const IntMatrix& a, const SearchLimits& limits,
                  std::vector<Move>& out) {
  const std::size_t n = a.rows();
  // Partitions refining the classes of identical rows, class by class.
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> per_class;
  for (const auto& cls : identical_row_classes(a)) {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::vector<std::vector<std::size_t>>> parts;
    set_partitions(cls, 0, blocks, parts);
    per_class.push_back(std::move(parts));
  }
  std::vector<std::size_t> choice(per_class.size(), 0);
  while (true) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t c = 0; c < per_class.size(); ++c)
      for (const auto& b : per_class[c][choice[c]]) blocks.push_back(b);
    std::sort(blocks.begin(), blocks.end());

    const std::size_t m = blocks.size();
    if (m < n) {
      IntMatrix s(n, m);
      IntMatrix r_a(m, n);
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t v : blocks[c]) s(v, c) = 1;
        for (std::size_t j = 0; j < n; ++j) r_a(c, j) = a(blocks[c].front(), j);
      }
      // Redistribute each row inside every column block of size >= 2.
      struct Slot {
        std::size_t row;
        std::size_t block;
        std::vector<IntVector> options;
      };
      std::vector<Slot> slots;
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t cb = 0; cb < m; ++cb) {
          if (blocks[cb].size() < 2) continue;
          Integer total = 0;
          for (std::size_t j : blocks[cb]) total += r_a(c, j);
          Slot slot{c, cb, {}};
          IntVector prefix;
          compositions(total, blocks[cb].size(), limits.max_entry, prefix,
                       slot.options);
          slots.push_back(std::move(slot));
        }
      }
      std::vector<std::size_t> pick(slots.size(), 0);
      bool any_empty = std::any_of(slots.begin(), slots.end(),
                                   [](const Slot& s) { return s.options.empty(); });
      while (!any_empty) {
        IntMatrix r_b = r_a;
        for (std::size_t t = 0; t < slots.size(); ++t) {
          const auto& opt = slots[t].options[pick[t]];
          const auto& cols = blocks[slots[t].block];
          for (std::size_t q = 0; q < cols.size(); ++q)
            r_b(slots[t].row, cols[q]) = opt[q];
        }
        if (!(r_b == r_a)) {
          IntMatrix b = s * r_b;
          out.push_back(Move{BalancedElementaryMove{s, r_a, r_b}, a, b});
        }
        std::size_t t = 0;
        while (t < slots.size() && ++pick[t] == slots[t].options.size()) {
          pick[t] = 0;
          ++t;
        }
        if (t == slots.size()) break;
      }
    }
    std::size_t c = 0;
    while (c < per_class.size() && ++choice[c] == per_class[c].size()) {
      choice[c] = 0;
      ++c;
    }
    if (c == per_class.size()) break;
  }
}

}  // namespace

std::vector<Move> neighbors(const IntMatrix& a, const SearchLimits& limits) {
  require_square(a, "neighbors");
  require_no_zero_rows(a, "neighbors");
  limits.validate();
  std::vector<Move> out;
  add_amalgamations(a, limits, out);
  add_outsplits(a, limits, out);
  add_balanced(a, limits, out);
  return out;
}

// ---------------------------------------------------------------------------
// Bidirectional search

namespace {

struct Node {
  IntMatrix matrix;
  std::optional<CanonicalKey> parent;
  std::optional<Move> via;  // parent.matrix -> matrix
};

struct Side {
  std::unordered_map<CanonicalKey, Node, CanonicalKeyHash> nodes;
  std::unordered_map<CanonicalKey, PermWitness, CanonicalKeyHash> witness;
  std::vector<CanonicalKey> frontier;
};

// Moves from the root of `side` down to the node with key `k`.
std::vector<Move> chain_to(const Side& side, const CanonicalKey& k) {
  std::vector<Move> out;
  const Node* node = &side.nodes.at(k);
  while (node->parent) {
    out.push_back(*node->via);
    node = &side.nodes.at(*node->parent);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

using Expansion = std::vector<std::pair<Move, Canonical>>;

Expansion expand(const IntMatrix& m, const SearchLimits& limits) {
  Expansion out;
  for (Move& mv : neighbors(m, limits)) {
    Canonical c = canonicalize(mv.to);
    out.emplace_back(std::move(mv), std::move(c));
  }
  return out;
}

}  // namespace

SearchResult search_balanced_path(const IntMatrix& a, const IntMatrix& b,
                                  const SearchLimits& limits) {
  require_square(a, "search_balanced_path");
  require_square(b, "search_balanced_path");
  require_no_zero_rows(a, "search_balanced_path");
  require_no_zero_rows(b, "search_balanced_path");
  limits.validate();

  Side sides[2];
  const IntMatrix* roots[2] = {&a, &b};
  for (int s = 0; s < 2; ++s) {
    Canonical c = canonicalize(*roots[s]);
    sides[s].nodes.emplace(c.key, Node{*roots[s], std::nullopt, std::nullopt});
    sides[s].witness.emplace(c.key, c.witness);
    sides[s].frontier.push_back(c.key);
  }

  SearchResult result;
  std::optional<CanonicalKey> meet;
  if (sides[0].frontier.front() == sides[1].frontier.front()) {
    meet = sides[0].frontier.front();
  }
  result.nodes = meet ? 1 : 2;

  while (!meet) {
    if (sides[0].frontier.empty() || sides[1].frontier.empty()) break;
    if (result.levels >= limits.max_depth) {
      result.limit_hit = true;
      break;
    }
    const int x = sides[1].frontier.size() < sides[0].frontier.size() ? 1 : 0;
    Side& mine = sides[x];
    const Side& other = sides[1 - x];
    const auto& frontier = mine.frontier;

    std::vector<Expansion> expansions(frontier.size());
    const unsigned workers = std::min<std::size_t>(limits.threads, frontier.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < frontier.size(); ++i)
        expansions[i] = expand(mine.nodes.at(frontier[i]).matrix, limits);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < frontier.size(); i += workers)
            expansions[i] = expand(mine.nodes.at(frontier[i]).matrix, limits);
        });
      }
      for (auto& t : pool) t.join();
    }
    ++result.levels;

    std::vector<CanonicalKey> next;
    for (std::size_t i = 0; i < frontier.size() && !meet; ++i) {
      for (auto& [move, canon] : expansions[i]) {
        if (mine.nodes.count(canon.key)) continue;
        if (result.nodes >= limits.max_nodes) {
          result.limit_hit = true;
          break;
        }
        ++result.nodes;
        IntMatrix to = move.to;
        mine.nodes.emplace(canon.key, Node{std::move(to), frontier[i], std::move(move)});
        mine.witness.emplace(canon.key, canon.witness);
        next.push_back(canon.key);
        if (other.nodes.count(canon.key)) {
          meet = canon.key;
          break;
        }
      }
      if (result.limit_hit) break;
    }
    if (result.limit_hit && !meet) break;
    mine.frontier = std::move(next);
  }
  if (!meet) return result;

  MoveSequence seq{a, chain_to(sides[0], *meet)};
  const IntMatrix& nf = sides[0].nodes.at(*meet).matrix;
  const IntMatrix& nb = sides[1].nodes.at(*meet).matrix;
  if (!(nf == nb)) {
    const PermWitness to_nb =
        sides[0].witness.at(*meet).then(sides[1].witness.at(*meet).inverse());
    seq.steps.push_back(permutation_move(nf, to_nb.mapping));
  }
  std::vector<Move> back = chain_to(sides[1], *meet);
  for (auto it = back.rbegin(); it != back.rend(); ++it)
    seq.steps.push_back(reversed(*it));

  const SequenceCheck check = verify_move_sequence(seq);
  if (!check.ok || !(seq.finish() == b)) {
    throw std::logic_error("search produced a path that does not verify: " +
                           check.reason);
  }
  result.path = std::move(seq);
  return result;
}

}  // namespace sft
