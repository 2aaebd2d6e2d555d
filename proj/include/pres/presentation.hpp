#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pres/word.hpp"

namespace pres {

struct Claims {
  long long num_generators = 0;
  long long num_relations = 0;
  std::optional<long long> bit_length_bound;
  // free-form notes: route taken, experimental flags, padding, ...
  std::map<std::string, std::string> notes;
};

// A relation u = v kept for display; the stored relator is u v^-1.
struct Relation {
  Word lhs, rhs;
};

struct Presentation {
  std::string family;
  std::map<std::string, long long> params;
  std::vector<Symbol> generators;
  std::vector<Word> relators;
  std::vector<Relation> display;  // parallel to relators when nonempty
  Claims claims;
  std::string provenance;

  bool has_generator(const Symbol& s) const;
  // Adds relator u v^-1 and remembers the (u, v) pair for display.
  void add_relation(const Word& u, const Word& v);
  void add_relator(const Word& r);
  // Recomputes claim counts from the actual data.
  void seal_claims();
  // Largest bit length over all relators plus generator count.
  long long total_bit_length() const;
  long long total_expo_length() const;
  void check_well_formed() const;  // throws on unknown symbols
};

// Generator-change lemma: given expressions of each new generator as a word
// in the old ones (new_gens) and of each old generator as a word in the new
// ones (old_exprs), produce a presentation on the new symbols with relators
//   d * w_d(V(D))^-1   for each new symbol d, and
//   r(V(D))            for each old relator r,
// dropping d-relators that normalize to the empty word.  The relator count
// equals |D| + |R| - (number of dropped identities).
Presentation rebase(const Presentation& p,
                    const std::vector<std::pair<Symbol, Word>>& new_gens,
                    const std::map<std::string, Word>& old_exprs);

// Substitutes words for symbols throughout.
Word substitute(const Word& w, const std::map<std::string, Word>& images);

}  // namespace pres
