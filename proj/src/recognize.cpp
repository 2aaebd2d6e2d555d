#include "pres/recognize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

namespace pres {

std::vector<int> orbit(const std::vector<Permutation>& gens, int point) {
  std::set<int> seen{point};
  std::queue<int> q;
  q.push(point);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (const auto& g : gens) {
      int y = g.apply(x);
      if (seen.insert(y).second) q.push(y);
      y = g.inverse().apply(x);
      if (seen.insert(y).second) q.push(y);
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

bool is_transitive(const std::vector<Permutation>& gens,
                   const std::vector<int>& domain) {
  if (domain.empty()) return true;
  auto orb = orbit(gens, domain[0]);
  return orb.size() == domain.size() &&
         std::includes(orb.begin(), orb.end(), domain.begin(), domain.end());
}

namespace {

// Minimal block system containing {a, b}; returns block size.
size_t min_block_size(const std::vector<Permutation>& gens,
                      const std::vector<int>& domain, int a, int b) {
  // classic union-find block refinement
  std::map<int, int> idx;
  for (size_t i = 0; i < domain.size(); i++) idx[domain[i]] = (int)i;
  std::vector<int> parent(domain.size());
  for (size_t i = 0; i < parent.size(); i++) parent[i] = (int)i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<int, int>> queue;
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent[y] = x;
    queue.push_back({x, y});
  };
  unite(idx[a], idx[b]);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      int gx = idx.at(g.apply(domain[x]));
      int gy = idx.at(g.apply(domain[y]));
      unite(gx, gy);
    }
  }
  size_t cnt = 0;
  int cls = find(idx[a]);
  for (size_t i = 0; i < domain.size(); i++)
    if (find((int)i) == cls) cnt++;
  return cnt;
}

}  // namespace

bool is_primitive(const std::vector<Permutation>& gens,
                  const std::vector<int>& domain) {
  if (domain.size() < 3) return true;
  int a = domain[0];
  for (size_t i = 1; i < domain.size(); i++) {
    size_t bs = min_block_size(gens, domain, a, domain[i]);
    if (bs != domain.size()) return false;
  }
  return true;
}

AltSymResult recognize_alt_sym(const std::vector<Permutation>& gens,
                               const std::vector<int>& domain,
                               uint64_t seed) {
  size_t n = domain.size();
  if (n < 5) {
    std::vector<ConcreteElement> cg;
    for (const auto& g : gens) cg.push_back(ConcreteElement(g));
    auto ord = group_order_closure(cg, 200);
    long long fact = 1;
    for (size_t i = 2; i <= n; i++) fact *= (long long)i;
    if (ord && *ord == fact) return AltSymResult::equals_sym;
    if (ord && *ord == fact / 2) {
      bool all_even = true;
      for (const auto& g : gens)
        if (g.sign() < 0) all_even = false;
      if (all_even) return AltSymResult::contains_alt;
    }
    return AltSymResult::smaller;
  }
  if (!is_transitive(gens, domain)) return AltSymResult::smaller;
  if (!is_primitive(gens, domain)) return AltSymResult::smaller;

  // hunt for a 3-cycle among powers of bounded random subproducts
  std::mt19937_64 rng(seed);
  auto three_cycle = [&](const Permutation& g) {
    long long o = g.order();
    if (o % 3 != 0) return false;
    Permutation h = g.pow(o / 3);
    return h.support().size() == 3;
  };
  bool found = false;
  // generators and short deterministic products first
  std::vector<Permutation> pool = gens;
  for (size_t i = 0; i < gens.size() && !found; i++)
    for (size_t j = 0; j < gens.size(); j++)
      pool.push_back(gens[i] * gens[j]);
  for (const auto& g : pool)
    if (three_cycle(g)) {
      found = true;
      break;
    }
  for (int tries = 0; tries < 500 && !found; tries++) {
    Permutation w;
    int len = 3 + (int)(rng() % 8);
    for (int i = 0; i < len; i++) {
      const Permutation& g = gens[rng() % gens.size()];
      w = (rng() & 1) ? w * g : w * g.inverse();
    }
    if (three_cycle(w)) found = true;
  }
  if (!found) return AltSymResult::smaller;
  for (const auto& g : gens)
    if (g.sign() < 0) return AltSymResult::equals_sym;
  return AltSymResult::contains_alt;
}

std::optional<long long> group_order_closure(
    const std::vector<ConcreteElement>& gens, long long limit) {
  if (gens.empty()) return 1;
  std::unordered_set<std::string> seen;
  std::vector<ConcreteElement> frontier;
  ConcreteElement id = gens[0] * gens[0].inverse();
  seen.insert(id.key());
  frontier.push_back(id);
  std::vector<ConcreteElement> all{id};
  while (!frontier.empty()) {
    std::vector<ConcreteElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        ConcreteElement y = x * g;
        if (seen.insert(y.key()).second) {
          if ((long long)seen.size() > limit) return std::nullopt;
          next.push_back(y);
          all.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return (long long)seen.size();
}

}  // namespace pres
