#include "tchains/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace tchains {

namespace {

void sort_canonically(std::vector<GroupElement>& elems, const Group& g) {
  std::sort(elems.begin(), elems.end(), [&](const GroupElement& a, const GroupElement& b) {
    const long long la = g.word_length(a);
    const long long lb = g.word_length(b);
    if (la != lb) return la < lb;
    return a.data < b.data;
  });
}

}  // namespace

Group Group::free_group(int rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  Group g;
  g.family_ = Family::Free;
  g.rank_ = rank;
  for (int j = 1; j <= rank; ++j) g.positive_gens_.push_back(GroupElement{{j}});
  for (int j = 1; j <= rank; ++j) g.symmetric_gens_.push_back(GroupElement{{j}});
  for (int j = 1; j <= rank; ++j) g.symmetric_gens_.push_back(GroupElement{{-j}});
  return g;
}

Group Group::free_abelian(int rank) {
  if (rank < 1) throw std::invalid_argument("free abelian rank must be >= 1");
  Group g;
  g.family_ = Family::Abelian;
  g.rank_ = rank;
  for (int j = 0; j < rank; ++j) {
    std::vector<long long> v(rank, 0);
    v[j] = 1;
    g.positive_gens_.push_back(GroupElement{v});
    g.symmetric_gens_.push_back(GroupElement{v});
    v[j] = -1;
    g.symmetric_gens_.push_back(GroupElement{v});
  }
  return g;
}

Group Group::free_abelian(int rank, std::vector<std::vector<long long>> generators) {
  Group g = free_abelian(rank);
  if (generators.empty()) return g;

  g.custom_gens_ = true;
  g.positive_gens_.clear();
  g.symmetric_gens_.clear();
  std::set<std::vector<long long>> sym;
  for (auto& v : generators) {
    if (static_cast<int>(v.size()) != rank) {
      throw std::invalid_argument("abelian generator has wrong dimension");
    }
    if (std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; })) {
      throw std::invalid_argument("abelian generator must be nonzero");
    }
    g.positive_gens_.push_back(GroupElement{v});
    sym.insert(v);
    std::vector<long long> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](long long c) { return -c; });
    sym.insert(neg);
  }
  for (const auto& v : sym) g.symmetric_gens_.push_back(GroupElement{v});

  // The symmetric closure generates Z^rank iff every +-e_i is reachable.
  // BFS with a depth cap; failure to hit a basis vector within the cap is
  // treated as a non-generating set.
  constexpr long long kGenerationCap = 64;
  std::set<std::vector<long long>> seen{std::vector<long long>(rank, 0)};
  std::deque<std::vector<long long>> frontier{std::vector<long long>(rank, 0)};
  std::set<std::vector<long long>> wanted;
  for (int j = 0; j < rank; ++j) {
    std::vector<long long> e(rank, 0);
    e[j] = 1;
    wanted.insert(e);
    e[j] = -1;
    wanted.insert(e);
  }
  for (long long depth = 0; depth < kGenerationCap && !wanted.empty() && !frontier.empty(); ++depth) {
    std::deque<std::vector<long long>> next;
    for (const auto& x : frontier) {
      for (const auto& s : g.symmetric_gens_) {
        std::vector<long long> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + s.data[i];
        if (seen.insert(y).second) {
          wanted.erase(y);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  if (!wanted.empty()) {
    throw std::invalid_argument("abelian generators do not generate the lattice");
  }
  return g;
}

Group Group::finite_table(std::vector<std::vector<int>> table, std::vector<int> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("finite group table must be nonempty");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("finite group table must be square");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw std::invalid_argument("finite group table entry out of range");
      }
    }
  }

  // identity
  int e = -1;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] != static_cast<int>(j) || table[j][i] != static_cast<int>(j)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      e = static_cast<int>(i);
      break;
    }
  }
  if (e < 0) throw std::invalid_argument("finite group table has no identity");

  // associativity
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw std::invalid_argument("finite group table is not associative");
        }
      }
    }
  }

  // inverses
  std::vector<int> inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] == e && table[j][i] == e) {
        inv[i] = static_cast<int>(j);
        break;
      }
    }
    if (inv[i] < 0) throw std::invalid_argument("finite group table element without inverse");
  }

  if (generators.empty() && n > 1) {
    throw std::invalid_argument("finite group requires an explicit generator subset");
  }
  std::set<int> sym;
  for (int s : generators) {
    if (s < 0 || static_cast<std::size_t>(s) >= n) {
      throw std::invalid_argument("finite group generator index out of range");
    }
    if (s == e) continue;  // identity contributes nothing to the metric
    sym.insert(s);
    sym.insert(inv[s]);
  }

  // BFS word lengths over the Cayley graph of the symmetric closure
  std::vector<long long> length(n, -1);
  length[e] = 0;
  std::deque<int> queue{e};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : sym) {
      int y = table[x][s];
      if (length[y] < 0) {
        length[y] = length[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (length[i] < 0) {
      throw std::invalid_argument("finite group generator subset does not generate");
    }
  }

  Group g;
  g.family_ = Family::Finite;
  g.table_ = std::move(table);
  g.inverse_table_ = std::move(inv);
  g.length_table_ = std::move(length);
  for (int s : generators) {
    if (s != e) g.positive_gens_.push_back(GroupElement{{s}});
  }
  for (int s : sym) g.symmetric_gens_.push_back(GroupElement{{s}});
  g.rank_ = static_cast<int>(g.positive_gens_.size());
  return g;
}

std::size_t Group::order() const {
  if (family_ != Family::Finite) throw std::invalid_argument("order() requires a finite group");
  return table_.size();
}

const std::vector<std::vector<int>>& Group::table() const {
  if (family_ != Family::Finite) throw std::invalid_argument("table() requires a finite group");
  return table_;
}

GroupElement Group::identity() const {
  switch (family_) {
    case Family::Free:
      return GroupElement{{}};
    case Family::Abelian:
      return GroupElement{std::vector<long long>(static_cast<std::size_t>(rank_), 0)};
    case Family::Finite: {
      for (std::size_t i = 0; i < length_table_.size(); ++i) {
        if (length_table_[i] == 0) return GroupElement{{static_cast<long long>(i)}};
      }
      throw std::logic_error("finite group lost its identity");
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  validate(a);
  validate(b);
  switch (family_) {
    case Family::Free: {
      std::vector<long long> word = a.data;
      for (long long letter : b.data) {
        if (!word.empty() && word.back() == -letter) {
          word.pop_back();
        } else {
          word.push_back(letter);
        }
      }
      return GroupElement{std::move(word)};
    }
    case Family::Abelian: {
      std::vector<long long> v(a.data.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.data[i] + b.data[i];
      return GroupElement{std::move(v)};
    }
    case Family::Finite:
      return GroupElement{{table_[static_cast<std::size_t>(a.data[0])][static_cast<std::size_t>(b.data[0])]}};
  }
  throw std::logic_error("unreachable");
}

GroupElement Group::inverse(const GroupElement& a) const {
  validate(a);
  switch (family_) {
    case Family::Free: {
      std::vector<long long> word(a.data.rbegin(), a.data.rend());
      for (long long& letter : word) letter = -letter;
      return GroupElement{std::move(word)};
    }
    case Family::Abelian: {
      std::vector<long long> v(a.data.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.data[i];
      return GroupElement{std::move(v)};
    }
    case Family::Finite:
      return GroupElement{{inverse_table_[static_cast<std::size_t>(a.data[0])]}};
  }
  throw std::logic_error("unreachable");
}

long long Group::word_length(const GroupElement& a) const {
  validate(a);
  switch (family_) {
    case Family::Free:
      return static_cast<long long>(a.data.size());
    case Family::Abelian: {
      if (!custom_gens_) {
        long long sum = 0;
        for (long long c : a.data) sum += c < 0 ? -c : c;
        return sum;
      }
      // BFS from the origin; generation was checked at construction, so this
      // terminates for every lattice point.
      const std::vector<long long> target = a.data;
      std::set<std::vector<long long>> seen{std::vector<long long>(target.size(), 0)};
      std::deque<std::vector<long long>> frontier{std::vector<long long>(target.size(), 0)};
      if (frontier.front() == target) return 0;
      long long depth = 0;
      while (!frontier.empty()) {
        ++depth;
        std::deque<std::vector<long long>> next;
        for (const auto& x : frontier) {
          for (const auto& s : symmetric_gens_) {
            std::vector<long long> y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + s.data[i];
            if (y == target) return depth;
            if (seen.insert(y).second) next.push_back(std::move(y));
          }
        }
        frontier = std::move(next);
      }
      throw std::logic_error("custom abelian metric failed to reach element");
    }
    case Family::Finite:
      return length_table_[static_cast<std::size_t>(a.data[0])];
  }
  throw std::logic_error("unreachable");
}

long long Group::distance(const GroupElement& a, const GroupElement& b) const {
  return word_length(multiply(inverse(a), b));
}

std::vector<GroupElement> Group::ball(long long radius) const {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  std::vector<GroupElement> out;
  switch (family_) {
    case Family::Free: {
      std::vector<GroupElement> layer{identity()};
      out.push_back(identity());
      for (long long len = 1; len <= radius; ++len) {
        std::vector<GroupElement> next;
        for (const auto& w : layer) {
          for (int j = 1; j <= rank_; ++j) {
            for (int sign : {+1, -1}) {
              const long long letter = sign * j;
              if (!w.data.empty() && w.data.back() == -letter) continue;
              GroupElement y = w;
              y.data.push_back(letter);
              next.push_back(std::move(y));
            }
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      break;
    }
    case Family::Abelian: {
      if (!custom_gens_) {
        // all integer vectors of l1 norm <= radius
        std::vector<long long> v(static_cast<std::size_t>(rank_), 0);
        auto rec = [&](auto&& self, std::size_t coord, long long budget) -> void {
          if (coord + 1 == v.size()) {
            for (long long c = -budget; c <= budget; ++c) {
              v[coord] = c;
              out.push_back(GroupElement{v});
            }
            return;
          }
          for (long long c = -budget; c <= budget; ++c) {
            v[coord] = c;
            self(self, coord + 1, budget - (c < 0 ? -c : c));
          }
        };
        rec(rec, 0, radius);
        break;
      }
      std::set<std::vector<long long>> seen{identity().data};
      std::deque<std::vector<long long>> frontier{identity().data};
      out.push_back(identity());
      for (long long depth = 1; depth <= radius && !frontier.empty(); ++depth) {
        std::deque<std::vector<long long>> next;
        for (const auto& x : frontier) {
          for (const auto& s : symmetric_gens_) {
            std::vector<long long> y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + s.data[i];
            if (seen.insert(y).second) {
              out.push_back(GroupElement{y});
              next.push_back(std::move(y));
            }
          }
        }
        frontier = std::move(next);
      }
      break;
    }
    case Family::Finite: {
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (length_table_[i] <= radius) out.push_back(GroupElement{{static_cast<long long>(i)}});
      }
      break;
    }
  }
  sort_canonically(out, *this);
  return out;
}

void Group::validate(const GroupElement& a) const {
  switch (family_) {
    case Family::Free: {
      for (std::size_t i = 0; i < a.data.size(); ++i) {
        const long long letter = a.data[i];
        if (letter == 0 || letter > rank_ || letter < -rank_) {
          throw std::invalid_argument("free group letter out of range");
        }
        if (i > 0 && a.data[i - 1] == -letter) {
          throw std::invalid_argument("free group word is not freely reduced");
        }
      }
      return;
    }
    case Family::Abelian: {
      if (static_cast<int>(a.data.size()) != rank_) {
        throw std::invalid_argument("abelian element has wrong dimension");
      }
      return;
    }
    case Family::Finite: {
      if (a.data.size() != 1 || a.data[0] < 0 ||
          static_cast<std::size_t>(a.data[0]) >= table_.size()) {
        throw std::invalid_argument("finite group element index out of range");
      }
      return;
    }
  }
}

bool Group::same_spec(const Group& other) const {
  if (family_ != other.family_) return false;
  switch (family_) {
    case Family::Free:
      return rank_ == other.rank_;
    case Family::Abelian: {
      if (rank_ != other.rank_ || custom_gens_ != other.custom_gens_) return false;
      return symmetric_gens_ == other.symmetric_gens_;
    }
    case Family::Finite:
      return table_ == other.table_ && symmetric_gens_ == other.symmetric_gens_;
  }
  return false;
}

std::string Group::describe() const {
  switch (family_) {
    case Family::Free:
      return "free group of rank " + std::to_string(rank_);
    case Family::Abelian:
      return "free abelian group of rank " + std::to_string(rank_) +
             (custom_gens_ ? " (custom generators)" : "");
    case Family::Finite:
      return "finite group of order " + std::to_string(table_.size());
  }
  return "group";
}

}  // namespace tchains
