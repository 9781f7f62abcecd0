#include "scg/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace scg {

namespace {

int min_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.apply(i) != i) return i;
  return -1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw Error("generator degree mismatch");
  build();
}

std::vector<Permutation> PermGroup::level_generators(size_t level) const {
  std::vector<Permutation> out;
  for (size_t j = level; j < strong_.size(); ++j)
    out.insert(out.end(), strong_[j].begin(), strong_[j].end());
  return out;
}

void PermGroup::rebuild_level_orbit(size_t level, const std::vector<Permutation>& gens) {
  Level& lv = levels_[level];
  lv.orbit.assign(1, lv.base);
  lv.slot.assign(static_cast<size_t>(degree_), 0);
  lv.slot[static_cast<size_t>(lv.base)] = 1;
  lv.transversal.assign(1, Permutation::identity(degree_));
  lv.inverse.assign(1, Permutation::identity(degree_));
  for (size_t i = 0; i < lv.orbit.size(); ++i) {
    for (const auto& s : gens) {
      int y = s.apply(lv.orbit[i]);
      if (!lv.slot[static_cast<size_t>(y)]) {
        lv.slot[static_cast<size_t>(y)] = static_cast<int>(lv.orbit.size()) + 1;
        lv.orbit.push_back(y);
        lv.transversal.push_back(compose(lv.transversal[i], s));
        lv.inverse.push_back(lv.transversal.back().inverse());
      }
    }
  }
}

std::pair<Permutation, size_t> PermGroup::sift(Permutation g, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int x = g.apply(lv.base);
    int s = lv.slot[static_cast<size_t>(x)];
    if (!s) return {std::move(g), i};
    g = compose(g, lv.inverse[static_cast<size_t>(s - 1)]);
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build() {
  levels_.clear();
  strong_.clear();

  auto strip_and_add = [&](const Permutation& g, size_t from) -> bool {
    auto [h, lev] = sift(g, from);
    if (h.is_identity()) return false;
    if (lev == levels_.size()) {
      Level lv;
      lv.base = min_moved_point(h);
      levels_.push_back(lv);
      strong_.emplace_back();
      rebuild_level_orbit(lev, {});
    }
    strong_[lev].push_back(std::move(h));
    return true;
  };

  for (const auto& g : gens_)
    if (!g.is_identity()) strip_and_add(g, 0);

  // Close all Schreier generators; repeat until no level changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < levels_.size(); ++i) {
      auto gens = level_generators(i);
      rebuild_level_orbit(i, gens);
      Level& lv = levels_[i];
      for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
        for (const auto& s : gens) {
          int y = s.apply(lv.orbit[idx]);
          int yslot = lv.slot[static_cast<size_t>(y)];
          Permutation sch =
              compose(lv.transversal[idx], s, lv.inverse[static_cast<size_t>(yslot - 1)]);
          if (!sch.is_identity() && strip_and_add(sch, i + 1)) changed = true;
        }
      }
    }
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw Error("degree mismatch in membership test");
  return sift(p, 0).first.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  UnionFind uf(degree_);
  for (const auto& g : gens_)
    for (int x = 0; x < degree_; ++x) uf.unite(x, g.apply(x));
  std::vector<std::vector<int>> out;
  std::vector<int> where(static_cast<size_t>(degree_), -1);
  for (int x = 0; x < degree_; ++x) {
    int r = uf.find(x);
    if (where[static_cast<size_t>(r)] < 0) {
      where[static_cast<size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<size_t>(where[static_cast<size_t>(r)])].push_back(x);
  }
  return out;
}

std::vector<int> PermGroup::orbit_of(int x) const {
  for (auto& orb : orbits())
    if (std::find(orb.begin(), orb.end(), x) != orb.end()) return orb;
  throw Error("point out of range");
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbits().size() == 1; }

bool PermGroup::is_primitive(BlockSystem* system) const {
  if (!is_transitive()) throw Error("primitivity is only defined for transitive groups here");
  const int n = degree_;
  if (n <= 2) return true;

  // Minimal block containing {0, x}: close the pair under all generators.
  auto block_partition = [&](int x) {
    UnionFind uf(n);
    std::deque<std::pair<int, int>> queue;
    uf.unite(0, x);
    queue.emplace_back(0, x);
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (const auto& g : gens_) {
        int a2 = g.apply(a), b2 = g.apply(b);
        if (uf.unite(a2, b2)) queue.emplace_back(a2, b2);
      }
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> where(static_cast<size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
      int r = uf.find(p);
      if (where[static_cast<size_t>(r)] < 0) {
        where[static_cast<size_t>(r)] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[static_cast<size_t>(where[static_cast<size_t>(r)])].push_back(p);
    }
    return blocks;
  };

  bool primitive = true;
  std::vector<std::vector<int>> best;
  for (int x = 1; x < n; ++x) {
    auto blocks = block_partition(x);
    size_t size = blocks[0].size();  // block of 0 comes first
    for (auto& b : blocks)
      if (std::find(b.begin(), b.end(), 0) != b.end()) size = b.size();
    if (size == static_cast<size_t>(n)) continue;  // pair generates the trivial partition
    primitive = false;
    if (best.empty() || blocks[0].size() < best[0].size()) best = std::move(blocks);
  }
  if (!primitive && system) system->blocks = std::move(best);
  return primitive;
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  const size_t k = levels_.size();
  if (k == 0) {
    fn(Permutation::identity(degree_));
    return;
  }
  std::vector<size_t> idx(k, 0);
  std::vector<Permutation> suffix(k);
  // suffix[i] = t_{k-1} * ... * t_i (apply deepest level first, level 0 last)
  suffix[k - 1] = levels_[k - 1].transversal[0];
  for (size_t i = k - 1; i-- > 0;) suffix[i] = compose(suffix[i + 1], levels_[i].transversal[0]);
  while (true) {
    if (!fn(suffix[0])) return;
    size_t pos = 0;
    while (pos < k && idx[pos] + 1 == levels_[pos].orbit.size()) idx[pos++] = 0;
    if (pos == k) return;
    ++idx[pos];
    for (size_t i = pos + 1; i-- > 0;) {
      const Permutation& t = levels_[i].transversal[idx[i]];
      suffix[i] = (i + 1 < k) ? compose(suffix[i + 1], t) : t;
    }
  }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) throw BudgetExceeded("group too large to enumerate", cap);
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(order_));
  for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

PermGroup restrict_to_orbit(const PermGroup& g, const std::vector<int>& orbit) {
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto& p : g.generators()) gens.push_back(restrict_to_orbit(p, orbit));
  return PermGroup(static_cast<int>(orbit.size()), std::move(gens));
}

Permutation restrict_to_orbit(const Permutation& p, const std::vector<int>& orbit) {
  std::vector<int> index(static_cast<size_t>(p.degree()), -1);
  for (size_t i = 0; i < orbit.size(); ++i) index[static_cast<size_t>(orbit[i])] = static_cast<int>(i);
  std::vector<int> images(orbit.size());
  for (size_t i = 0; i < orbit.size(); ++i) {
    int y = p.apply(orbit[i]);
    if (index[static_cast<size_t>(y)] < 0) throw Error("permutation does not stabilize the orbit");
    images[i] = index[static_cast<size_t>(y)];
  }
  return Permutation::from_images(images);
}

PermGroup intersect(const PermGroup& g, const PermGroup& h, std::uint64_t cap) {
  if (g.degree() != h.degree()) throw Error("degree mismatch in intersect");
  const PermGroup& smaller = (g.order() <= h.order()) ? g : h;
  const PermGroup& other = (g.order() <= h.order()) ? h : g;
  if (smaller.order() > cap)
    throw BudgetExceeded("intersection budget exceeded: smaller group has order " +
                             std::to_string(smaller.order()),
                         cap);
  std::vector<Permutation> found;
  PermGroup partial = PermGroup::trivial(g.degree());
  smaller.for_each_element([&](const Permutation& p) {
    if (!p.is_identity() && other.contains(p) && !partial.contains(p)) {
      found.push_back(p);
      partial = PermGroup(g.degree(), found);
    }
    return true;
  });
  return partial;
}

bool diagonal_isomorphic(const std::vector<Permutation>& t1, const std::vector<Permutation>& t2) {
  if (t1.size() != t2.size()) throw Error("tuple length mismatch");
  if (t1.empty()) return true;
  const int n1 = t1[0].degree(), n2 = t2[0].degree();
  PermGroup g1(n1, t1);
  PermGroup g2(n2, t2);
  if (g1.order() != g2.order()) return false;
  std::vector<Permutation> diag;
  diag.reserve(t1.size());
  for (size_t i = 0; i < t1.size(); ++i) diag.push_back(direct_sum(t1[i], t2[i]));
  return PermGroup(n1 + n2, diag).order() == g1.order();
}

std::vector<Permutation> bfs_closure(int degree, const std::vector<Permutation>& gens,
                                     std::uint64_t cap) {
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  Permutation id = Permutation::identity(degree);
  out.push_back(id);
  seen.insert(id);
  for (size_t head = 0; head < out.size(); ++head) {
    Permutation cur = out[head];  // copy: out may reallocate below
    for (const auto& s : gens) {
      Permutation nxt = compose(cur, s);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap) throw BudgetExceeded("closure budget exceeded", cap);
        out.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

}  // namespace scg
