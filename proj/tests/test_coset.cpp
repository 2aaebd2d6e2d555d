#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "pres/coset.hpp"

using namespace pres;

namespace {

Presentation cyclic(long long n) {
  Presentation p;
  p.family = "cyclic";
  Symbol a{"a"};
  p.generators = {a};
  p.add_relator(power(Word::gen(a), n));
  return p;
}

Presentation a5() {
  Presentation p;
  p.family = "a5";
  Symbol x{"x"}, y{"y"};
  p.generators = {x, y};
  p.add_relator(power(Word::gen(x), 5));
  p.add_relator(power(Word::gen(y), 2));
  p.add_relator(power(concat(Word::gen(x), Word::gen(y)), 3));
  return p;
}

Presentation psl27() {
  // (2,3,7;4) quotient, order 168; exercises heavy coincidence traffic
  Presentation p;
  p.family = "psl27";
  Symbol a{"a"}, b{"b"};
  p.generators = {a, b};
  p.add_relator(power(Word::gen(a), 2));
  p.add_relator(power(Word::gen(b), 3));
  p.add_relator(power(concat(Word::gen(a), Word::gen(b)), 7));
  p.add_relator(power(commutator(Word::gen(a), Word::gen(b)), 4));
  return p;
}

}  // namespace

TEST_CASE("cyclic group indices") {
  auto p = cyclic(6);
  auto r = todd_coxeter(p, {});
  REQUIRE(r.completed);
  CHECK(*r.index == 6);
  auto r2 = todd_coxeter(p, {power(Word::gen(Symbol{"a"}), 2)});
  REQUIRE(r2.completed);
  CHECK(*r2.index == 2);
}

TEST_CASE("A5 order 60 with both strategies") {
  auto p = a5();
  for (auto s : {Strategy::hlt_lookahead, Strategy::felsch}) {
    EnumOptions o;
    o.strategy = s;
    auto r = todd_coxeter(p, {}, o);
    REQUIRE(r.completed);
    CHECK(*r.index == 60);
  }
  // subgroup <x> has order 5: index 12
  auto r = todd_coxeter(p, {Word::gen(Symbol{"x"})});
  REQUIRE(r.completed);
  CHECK(*r.index == 12);
}

TEST_CASE("coincidence-heavy enumeration") {
  auto p = psl27();
  for (auto s : {Strategy::hlt_lookahead, Strategy::felsch}) {
    EnumOptions o;
    o.strategy = s;
    auto r = todd_coxeter(p, {}, o);
    REQUIRE(r.completed);
    CHECK(*r.index == 168);
  }
}

TEST_CASE("determinism: identical replay hashes") {
  auto p = psl27();
  EnumOptions o;
  std::ostringstream log1, log2;
  o.replay = &log1;
  auto r1 = todd_coxeter(p, {}, o);
  o.replay = &log2;
  auto r2 = todd_coxeter(p, {}, o);
  CHECK(r1.replay_hash == r2.replay_hash);
  CHECK(log1.str() == log2.str());
  CHECK(!log1.str().empty());
}

TEST_CASE("budget exceeded is soft") {
  auto p = a5();
  EnumOptions o;
  o.max_cosets = 20;
  auto r = todd_coxeter(p, {}, o);
  CHECK(!r.completed);
  CHECK(!r.index.has_value());
  CHECK(r.high_water > 0);
}

TEST_CASE("trivial and empty edge cases") {
  auto p = cyclic(1);
  auto r = todd_coxeter(p, {});
  REQUIRE(r.completed);
  CHECK(*r.index == 1);
  CHECK_THROWS(todd_coxeter(p, {}, EnumOptions{.strategy = Strategy::hlt_lookahead,
                                               .max_cosets = 0}));
}
