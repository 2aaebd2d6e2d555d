#include "pres/coset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pres {

namespace {

constexpr int32_t UNDEF = -1;

struct Enumerator {
  int ngen = 0;
  int cols = 0;
  std::vector<std::vector<int32_t>> rels;      // relators as column strings
  std::vector<std::vector<int32_t>> subgens;   // subgroup generator words
  std::vector<std::vector<std::vector<int32_t>>> rot_by_col;  // felsch tables

  std::vector<int32_t> table;  // nrows * cols
  std::vector<int32_t> parent; // union-find; parent[i] == i iff live
  size_t nrows = 0;
  size_t live = 0;
  size_t max_cosets;
  size_t high_water = 0;
  size_t total_defined = 0;
  std::vector<std::pair<int32_t, int32_t>> deductions;
  std::vector<std::pair<int32_t, int32_t>> coinc_queue;
  std::ostream* replay = nullptr;
  uint64_t hash = 1469598103934665603ull;  // FNV offset basis
  bool overflow = false;

  void ev(char tag, long long a, long long b, long long c) {
    auto mix = [&](uint64_t x) {
      hash ^= x;
      hash *= 1099511628211ull;
    };
    mix((uint64_t)tag);
    mix((uint64_t)a);
    mix((uint64_t)b);
    mix((uint64_t)c);
    if (replay) {
      (*replay) << tag << ' ' << a << ' ' << b << ' ' << c << '\n';
    }
  }

  int inv(int c) const { return c < ngen ? c + ngen : c - ngen; }

  int32_t at(int32_t r, int c) const { return table[(size_t)r * cols + c]; }
  void set(int32_t r, int c, int32_t v) { table[(size_t)r * cols + c] = v; }

  int32_t rep(int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool dead(int32_t x) { return rep(x) != x; }

  int32_t define(int32_t a, int c) {
    if (nrows >= max_cosets) {
      overflow = true;
      return UNDEF;
    }
    int32_t b = (int32_t)nrows;
    nrows++;
    table.resize(nrows * cols, UNDEF);
    parent.push_back(b);
    live++;
    high_water = std::max(high_water, live);
    total_defined++;
    set(a, c, b);
    set(b, inv(c), a);
    ev('D', a, c, b);
    return b;
  }

  void merge(int32_t a, int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    live--;
    ev('M', a, b, 0);
    coinc_queue.push_back({a, b});
  }

  void coincidence(int32_t a, int32_t b) {
    merge(a, b);
    while (!coinc_queue.empty()) {
      auto [keep, gone] = coinc_queue.back();
      coinc_queue.pop_back();
      for (int c = 0; c < cols; c++) {
        int32_t d = at(gone, c);
        if (d == UNDEF) continue;
        set(d, inv(c), UNDEF);
        int32_t mu = rep(gone), nu = rep(d);
        int32_t ex = at(mu, c);
        if (ex != UNDEF) {
          merge(nu, ex);
        } else {
          int32_t ex2 = at(nu, inv(c));
          if (ex2 != UNDEF) {
            merge(mu, ex2);
          } else {
            set(mu, c, nu);
            set(nu, inv(c), mu);
            deductions.push_back({mu, c});
          }
        }
      }
    }
  }

  // Scan word w at coset a.  If fill, missing cosets are defined.
  // Returns false if the scan is incomplete (only possible without fill).
  bool scan(int32_t a, const std::vector<int32_t>& w, bool fill) {
    if (w.empty()) return true;
    int32_t f = a, b = a;
    int i = 0, j = (int)w.size() - 1;
    while (true) {
      while (i <= j && at(f, w[i]) != UNDEF) {
        f = at(f, w[i]);
        i++;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, inv(w[j])) != UNDEF) {
        b = at(b, inv(w[j]));
        j--;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        set(f, w[i], b);
        set(b, inv(w[i]), f);
        deductions.push_back({f, w[i]});
        ev('F', f, w[i], b);
        return true;
      }
      if (!fill) return false;
      if (define(f, w[i]) == UNDEF) return false;  // overflow
    }
  }

  void lookahead() {
    ev('L', 0, 0, 0);
    for (int32_t a = 0; a < (int32_t)nrows; a++) {
      if (dead(a)) continue;
      for (const auto& r : rels) {
        scan(a, r, false);
        if (dead(a)) break;
      }
    }
  }

  // Renumbers live cosets, preserving order.  Returns old->new map.
  std::vector<int32_t> compact() {
    std::vector<int32_t> remap(nrows, UNDEF);
    int32_t next = 0;
    for (int32_t a = 0; a < (int32_t)nrows; a++)
      if (!dead(a)) remap[a] = next++;
    std::vector<int32_t> nt((size_t)next * cols, UNDEF);
    for (int32_t a = 0; a < (int32_t)nrows; a++) {
      if (remap[a] == UNDEF) continue;
      for (int c = 0; c < cols; c++) {
        int32_t v = at(a, c);
        if (v != UNDEF) nt[(size_t)remap[a] * cols + c] = remap[rep(v)];
      }
    }
    table = std::move(nt);
    ev('K', (long long)nrows, (long long)next, 0);
    nrows = next;
    parent.resize(nrows);
    for (size_t i = 0; i < nrows; i++) parent[i] = (int32_t)i;
    return remap;
  }

  void process_deductions() {
    while (!deductions.empty()) {
      auto [a, c] = deductions.back();
      deductions.pop_back();
      if (dead(a)) {
        a = rep(a);
      }
      if (at(a, c) == UNDEF) continue;
      int32_t b = at(a, c);
      for (const auto& r : rot_by_col[c]) {
        scan(a, r, false);
        if (dead(a)) break;
      }
      a = rep(a);
      b = rep(b);
      for (const auto& r : rot_by_col[inv(c)]) {
        scan(b, r, false);
        if (dead(b)) break;
      }
    }
  }

  // Lookahead pass + table compaction; returns the new position of alpha,
  // or UNDEF if the table is still essentially full.
  int32_t relieve(int32_t alpha) {
    lookahead();
    int32_t ar = rep(alpha);
    auto remap = compact();
    overflow = false;
    if (nrows >= max_cosets - max_cosets / 20) return UNDEF;
    return remap[ar];
  }

  EnumResult run_hlt() {
    for (const auto& w : subgens) {
      scan(0, w, true);
      if (overflow) {
        if (relieve(0) == UNDEF) return fail();
        scan(0, w, true);
        if (overflow) return fail();
      }
    }
    int32_t alpha = 0;
    while (alpha < (int32_t)nrows) {
      if (dead(alpha)) {
        alpha++;
        continue;
      }
      bool redo = true;
      while (redo && !dead(alpha)) {
        redo = false;
        for (const auto& r : rels) {
          scan(alpha, r, true);
          if (overflow) {
            alpha = relieve(alpha);
            if (alpha == UNDEF) return fail();
            redo = true;
            break;
          }
          if (dead(alpha)) break;
        }
        if (!redo && !dead(alpha)) {
          for (int c = 0; c < cols && !dead(alpha); c++) {
            if (at(alpha, c) == UNDEF) {
              if (define(alpha, c) == UNDEF) {
                alpha = relieve(alpha);
                if (alpha == UNDEF) return fail();
                redo = true;
                break;
              }
            }
          }
        }
      }
      alpha++;
    }
    return finish();
  }

  EnumResult run_felsch() {
    for (const auto& w : subgens) {
      scan(0, w, true);
      if (overflow) return fail();
      process_deductions();
    }
    while (true) {
      // first undefined entry in row-major, column order
      bool found = false;
      for (int32_t a = 0; a < (int32_t)nrows && !found; a++) {
        if (dead(a)) continue;
        for (int c = 0; c < cols && !found; c++) {
          if (at(a, c) == UNDEF) {
            if (define(a, c) == UNDEF) return fail();
            process_deductions();
            found = true;
          }
        }
      }
      if (!found) break;
    }
    return finish();
  }

  EnumResult fail() {
    EnumResult r;
    r.completed = false;
    r.high_water = std::max(high_water, live);
    r.total_defined = total_defined;
    r.replay_hash = hash;
    return r;
  }

  EnumResult finish() {
    // closed-table invariant: every live entry defined, inverse-consistent,
    // and pointing at a live coset
    for (int32_t a = 0; a < (int32_t)nrows; a++) {
      if (dead(a)) continue;
      for (int c = 0; c < cols; c++) {
        int32_t b = at(a, c);
        if (b == UNDEF || dead(b) || at(b, inv(c)) != a)
          throw std::logic_error("coset table inconsistent after completion");
      }
    }
    EnumResult r;
    r.completed = true;
    r.index = (long long)live;
    r.high_water = high_water;
    r.total_defined = total_defined;
    r.replay_hash = hash;
    return r;
  }
};

std::vector<int32_t> word_to_cols(const Word& w,
                                  const std::map<std::string, int>& index,
                                  int ngen) {
  std::vector<int32_t> out;
  for (const auto& s : w.syllables()) {
    auto it = index.find(s.sym.name);
    if (it == index.end())
      throw std::runtime_error("todd_coxeter: relator symbol not in generators");
    int g = it->second;
    long long e = s.exp;
    int c = e > 0 ? g : g + ngen;
    long long n = e > 0 ? e : -e;
    for (long long i = 0; i < n; i++) out.push_back(c);
  }
  return out;
}

}  // namespace

EnumResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        const EnumOptions& opts) {
  if (opts.max_cosets < 1)
    throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  Enumerator en;
  en.ngen = (int)p.generators.size();
  en.cols = 2 * en.ngen;
  en.max_cosets = opts.max_cosets;
  en.replay = opts.replay;

  std::map<std::string, int> index;
  for (int i = 0; i < en.ngen; i++) index[p.generators[i].name] = i;
  for (const auto& r : p.relators) {
    auto cols = word_to_cols(r, index, en.ngen);
    if (!cols.empty()) en.rels.push_back(cols);
  }
  for (const auto& w : subgroup) {
    auto cols = word_to_cols(w, index, en.ngen);
    if (!cols.empty()) en.subgens.push_back(cols);
  }

  if (opts.strategy == Strategy::felsch) {
    // rotations of each relator grouped by leading column
    en.rot_by_col.resize(en.cols);
    std::set<std::vector<int32_t>> seen;
    for (const auto& r : en.rels) {
      for (size_t s = 0; s < r.size(); s++) {
        std::vector<int32_t> rot(r.begin() + s, r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + s);
        if (seen.insert(rot).second) en.rot_by_col[rot[0]].push_back(rot);
      }
      // rotations of the inverse word
      std::vector<int32_t> ri(r.rbegin(), r.rend());
      for (auto& c : ri) c = en.inv(c);
      for (size_t s = 0; s < ri.size(); s++) {
        std::vector<int32_t> rot(ri.begin() + s, ri.end());
        rot.insert(rot.end(), ri.begin(), ri.begin() + s);
        if (seen.insert(rot).second) en.rot_by_col[rot[0]].push_back(rot);
      }
    }
  }

  // coset 0 = the subgroup
  en.nrows = 1;
  en.live = 1;
  en.high_water = 1;
  en.table.assign(en.cols, UNDEF);
  en.parent = {0};
  en.ev('S', en.ngen, (long long)p.relators.size(),
        (long long)subgroup.size());

  return opts.strategy == Strategy::felsch ? en.run_felsch() : en.run_hlt();
}

}  // namespace pres
