#include "pres/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace pres {

bool Presentation::has_generator(const Symbol& s) const {
  return std::find(generators.begin(), generators.end(), s) !=
         generators.end();
}

void Presentation::add_relation(const Word& u, const Word& v) {
  relators.push_back(concat(u, invert(v)));
  display.push_back(Relation{u, v});
}

void Presentation::add_relator(const Word& r) {
  relators.push_back(r);
  display.push_back(Relation{r, Word()});
}

void Presentation::seal_claims() {
  claims.num_generators = (long long)generators.size();
  claims.num_relations = (long long)relators.size();
}

long long Presentation::total_bit_length() const {
  long long total = (long long)generators.size();
  for (const auto& r : relators) total += bit_length(r);
  return total;
}

long long Presentation::total_expo_length() const {
  long long total = 0;
  for (const auto& r : relators) total += expo_length(r);
  return total;
}

void Presentation::check_well_formed() const {
  for (const auto& r : relators)
    for (const auto& s : r.syllables())
      if (!has_generator(s.sym))
        throw std::runtime_error("relator uses unknown symbol " + s.sym.name);
}

Word substitute(const Word& w, const std::map<std::string, Word>& images) {
  Word out;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.sym.name);
    if (it == images.end())
      throw std::runtime_error("substitute: unknown symbol " + s.sym.name);
    out = concat(out, power(it->second, s.exp));
  }
  return out;
}

Presentation rebase(const Presentation& p,
                    const std::vector<std::pair<Symbol, Word>>& new_gens,
                    const std::map<std::string, Word>& old_exprs) {
  for (const auto& g : p.generators)
    if (!old_exprs.count(g.name))
      throw std::runtime_error("rebase: no expression for old generator " +
                               g.name);
  for (const auto& [d, wd] : new_gens)
    for (const auto& s : wd.syllables())
      if (!p.has_generator(s.sym))
        throw std::runtime_error("rebase: unknown old symbol " + s.sym.name);
  for (const auto& [name, w] : old_exprs)
    for (const auto& s : w.syllables()) {
      bool known = false;
      for (const auto& [d, wd] : new_gens)
        if (d == s.sym) known = true;
      if (!known)
        throw std::runtime_error("rebase: unknown new symbol " + s.sym.name);
    }

  Presentation out;
  out.family = p.family + "/rebased";
  out.params = p.params;
  out.provenance = "generator-change rebase of " + p.family;
  for (const auto& [d, wd] : new_gens) out.generators.push_back(d);

  // d = w_d(V(D)): substitute old-generator expressions into w_d.
  for (const auto& [d, wd] : new_gens) {
    Word rhs = substitute(wd, old_exprs);
    Word rel = concat(Word::gen(d), invert(rhs));
    if (!rel.empty()) {
      out.relators.push_back(rel);
      out.display.push_back(Relation{Word::gen(d), rhs});
    }
  }
  // r(V(D)) = 1 for each old relator.
  for (const auto& r : p.relators) {
    Word rel = substitute(r, old_exprs);
    out.relators.push_back(rel);
    out.display.push_back(Relation{rel, Word()});
  }
  out.seal_claims();
  return out;
}

}  // namespace pres
