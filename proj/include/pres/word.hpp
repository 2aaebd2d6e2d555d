#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <utility>

namespace pres {

// A generator symbol. Symbols compare by name; uniqueness within a
// presentation is the presentation's responsibility.
struct Symbol {
  std::string name;

  Symbol() = default;
  explicit Symbol(std::string n) : name(std::move(n)) {}

  bool operator==(const Symbol& o) const { return name == o.name; }
  bool operator!=(const Symbol& o) const { return name != o.name; }
  bool operator<(const Symbol& o) const { return name < o.name; }
};

struct Syllable {
  Symbol sym;
  long long exp = 0;

  bool operator==(const Syllable& o) const {
    return sym == o.sym && exp == o.exp;
  }
};

// A free-group word in normal form: no zero exponents, no two adjacent
// syllables on the same symbol.  The empty word is the identity.
class Word {
 public:
  Word() = default;
  static Word normalize(const std::vector<Syllable>& raw);
  static Word gen(const Symbol& s, long long e = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  size_t size() const { return syl_.size(); }

  bool operator==(const Word& o) const { return syl_ == o.syl_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;

  std::string str() const;

 private:
  std::vector<Syllable> syl_;
  friend Word concat(const Word&, const Word&);
  friend Word invert(const Word&);
};

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, long long n);
// conjugate(w, v) = v^-1 w v
Word conjugate(const Word& w, const Word& v);
// commutator convention [x,y] = x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

// Bit-length metric: sum over syllables of 1 + cost(|e|) with cost(1) = 0
// and cost(e) = floor(log2 e) + 1 for e >= 2.
long long bit_length(const Word& w);
// Number of syllables with |exponent| >= 2.
long long expo_length(const Word& w);

// Group-theoretic Horner identity: v v^f v^{f^2} ... v^{f^n} = (v f^-1)^n v f^n.
// Returns the two sides as words in normal form; they agree in every group.
std::pair<Word, Word> horner(const Word& v, const Word& f, long long n);

// Compact word for u^{g0} (u^{g1})^{h^step} ... (u^{ge})^{h^{e*step}}, i.e.
// u^{g0} h^-step u^{g1} h^-step ... u^{ge} h^{e*step}.  Coefficients must lie
// in [0, p).
Word poly_word(const Symbol& u, const Symbol& h,
               const std::vector<long long>& coeffs, long long p,
               long long step = 1);
// Same with an arbitrary base word in place of a single generator.
Word poly_word_base(const Word& u, const Word& h,
                    const std::vector<long long>& coeffs, long long p,
                    long long step = 1);

}  // namespace pres
