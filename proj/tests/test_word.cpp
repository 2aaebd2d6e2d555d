#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pres/presentation.hpp"
#include "pres/word.hpp"

using namespace pres;

namespace {
const Symbol A{"a"}, B{"b"};
Word W(std::vector<Syllable> s) { return Word::normalize(s); }
}  // namespace

TEST_CASE("normalize") {
  CHECK(W({{A, 2}, {A, -2}}).empty());
  CHECK(W({{A, 1}, {B, 0}, {A, 3}}) == W({{A, 4}}));
  CHECK(W({{A, 1}, {B, 2}, {B, -1}}) == W({{A, 1}, {B, 1}}));
  // idempotent
  auto w = W({{A, 1}, {B, 2}, {B, -1}});
  CHECK(Word::normalize(w.syllables()) == w);
}

TEST_CASE("invert/concat/power/commutator") {
  CHECK(invert(W({{A, 2}, {B, -1}})) == W({{B, 1}, {A, -2}}));
  CHECK(commutator(Word::gen(A), Word::gen(A)).empty());
  CHECK(power(Word::gen(A), 5) == W({{A, 5}}));
  auto w = W({{A, 2}, {B, -3}, {A, 1}});
  CHECK(concat(w, invert(w)).empty());
  CHECK(power(w, 0).empty());
}

TEST_CASE("bit_length and expo_length") {
  CHECK(bit_length(Word::gen(A)) == 1);
  CHECK(bit_length(W({{A, 5}, {B, -4}})) == 8);
  CHECK(bit_length(Word()) == 0);
  CHECK(expo_length(W({{A, 5}, {B, -4}, {A, 1}})) == 2);
  CHECK(expo_length(W({{A, 1}, {B, 1}})) == 0);
  CHECK(expo_length(W({{A, -3}})) == 1);
  // subadditivity on random-ish words
  auto u = W({{A, 7}, {B, 2}});
  auto v = W({{B, -2}, {A, 9}});
  CHECK(bit_length(concat(u, v)) <= bit_length(u) + bit_length(v));
  // power bound for single syllables
  for (long long n : {2, 3, 5, 17, 100}) {
    long long lg = 0;
    while ((1ll << (lg + 1)) <= n) lg++;
    CHECK(bit_length(power(Word::gen(A), n)) <= bit_length(Word::gen(A)) + lg + 1);
  }
}

TEST_CASE("horner small cases") {
  auto [l0, r0] = horner(Word::gen(A), Word::gen(B), 0);
  CHECK(l0 == Word::gen(A));
  CHECK(r0 == Word::gen(A));
  auto [l1, r1] = horner(Word::gen(A), Word::gen(B), 1);
  CHECK(l1 == W({{A, 1}, {B, -1}, {A, 1}, {B, 1}}));
  CHECK(l1 == r1);
  auto [l2, r2] = horner(Word::gen(A), Word::gen(B), 2);
  CHECK(l2 == W({{A, 1}, {B, -1}, {A, 1}, {B, -1}, {A, 1}, {B, 2}}));
  CHECK(r2 == W({{A, 1}, {B, -1}, {A, 1}, {B, -1}, {A, 1}, {B, 2}}));
}

TEST_CASE("poly_word") {
  const Symbol U{"u"}, H{"h"};
  CHECK(poly_word(U, H, {1}, 5) == Word::gen(U));
  // g = x: u^0 h^-1 u^1 h = h^-1 u h
  CHECK(poly_word(U, H, {0, 1}, 5) ==
        W({{H, -1}, {U, 1}, {H, 1}}));
  CHECK(poly_word(U, H, {2, 3}, 5) ==
        W({{U, 2}, {H, -1}, {U, 3}, {H, 1}}));
  CHECK(poly_word(U, H, {}, 5).empty());
  CHECK_THROWS(poly_word(U, H, {5}, 5));
}

TEST_CASE("rebase identity keeps relator count") {
  Presentation p;
  p.family = "test";
  p.generators = {A, B};
  p.add_relation(power(Word::gen(A), 3), Word());
  p.add_relation(power(Word::gen(B), 2), Word());
  p.add_relation(power(concat(Word::gen(A), Word::gen(B)), 3), Word());
  p.seal_claims();

  std::vector<std::pair<Symbol, Word>> ng = {{A, Word::gen(A)},
                                             {B, Word::gen(B)}};
  std::map<std::string, Word> oe = {{"a", Word::gen(A)}, {"b", Word::gen(B)}};
  auto q = rebase(p, ng, oe);
  CHECK(q.relators.size() == 3);

  // one shared generator: {a, c=ab} over {a, b}; express b as c^-1 a,
  // which equals b in the group (b^2 = 1) but not freely, so only the
  // shared generator's definition relator drops.
  const Symbol C{"c"};
  std::vector<std::pair<Symbol, Word>> ng2 = {
      {A, Word::gen(A)}, {C, concat(Word::gen(A), Word::gen(B))}};
  std::map<std::string, Word> oe2 = {
      {"a", Word::gen(A)}, {"b", concat(invert(Word::gen(C)), Word::gen(A))}};
  auto q2 = rebase(p, ng2, oe2);
  CHECK(q2.relators.size() == 2 + 3 - 1);
}
