#include "pres/word.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pres {

Word Word::normalize(const std::vector<Syllable>& raw) {
  Word w;
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!w.syl_.empty() && w.syl_.back().sym == s.sym) {
      w.syl_.back().exp += s.exp;
      if (w.syl_.back().exp == 0) w.syl_.pop_back();
    } else {
      w.syl_.push_back(s);
    }
  }
  return w;
}

Word Word::gen(const Symbol& s, long long e) {
  return normalize({Syllable{s, e}});
}

bool Word::operator<(const Word& o) const {
  return std::lexicographical_compare(
      syl_.begin(), syl_.end(), o.syl_.begin(), o.syl_.end(),
      [](const Syllable& a, const Syllable& b) {
        if (a.sym.name != b.sym.name) return a.sym.name < b.sym.name;
        return a.exp < b.exp;
      });
}

std::string Word::str() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << "*";
    first = false;
    os << s.sym.name;
    if (s.exp != 1) os << "^" << s.exp;
  }
  return os.str();
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  for (const auto& s : b.syl_) {
    if (!w.syl_.empty() && w.syl_.back().sym == s.sym) {
      w.syl_.back().exp += s.exp;
      if (w.syl_.back().exp == 0) w.syl_.pop_back();
    } else {
      w.syl_.push_back(s);
    }
  }
  return w;
}

Word invert(const Word& w) {
  Word r;
  r.syl_.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    r.syl_.push_back(Syllable{it->sym, -it->exp});
  return r;
}

Word power(const Word& w, long long n) {
  if (n == 0) return Word();
  Word base = n < 0 ? invert(w) : w;
  long long m = n < 0 ? -n : n;
  if (w.size() == 1) {
    Syllable s = base.syllables()[0];
    return Word::normalize({Syllable{s.sym, s.exp * m}});
  }
  Word r;
  for (long long i = 0; i < m; i++) r = concat(r, base);
  return r;
}

Word conjugate(const Word& w, const Word& v) {
  return concat(concat(invert(v), w), v);
}

Word commutator(const Word& x, const Word& y) {
  return concat(concat(invert(x), invert(y)), concat(x, y));
}

long long bit_length(const Word& w) {
  long long total = 0;
  for (const auto& s : w.syllables()) {
    long long e = s.exp < 0 ? -s.exp : s.exp;
    long long cost = 0;
    if (e >= 2) {
      while (e > 0) {
        cost++;
        e >>= 1;
      }
    }
    total += 1 + cost;
  }
  return total;
}

long long expo_length(const Word& w) {
  long long c = 0;
  for (const auto& s : w.syllables())
    if (s.exp >= 2 || s.exp <= -2) c++;
  return c;
}

std::pair<Word, Word> horner(const Word& v, const Word& f, long long n) {
  if (n < 0) throw std::invalid_argument("horner: n must be >= 0");
  Word lhs;
  Word finv = invert(f);
  // v * v^f * ... * v^{f^n}
  Word fi;  // f^i
  for (long long i = 0; i <= n; i++) {
    lhs = concat(lhs, conjugate(v, fi));
    fi = concat(fi, f);
  }
  Word rhs = concat(concat(power(concat(v, finv), n), v), power(f, n));
  return {lhs, rhs};
}

Word poly_word_base(const Word& u, const Word& h,
                    const std::vector<long long>& coeffs, long long p,
                    long long step) {
  for (long long c : coeffs)
    if (c < 0 || c >= p)
      throw std::invalid_argument("poly_word: coefficient outside [0,p)");
  // Trim trailing zeros so the trailing h-exponent matches the true degree.
  size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0) deg--;
  if (deg == 0) return Word();
  Word hinv = power(h, -step);
  Word w;
  for (size_t i = 0; i < deg; i++) {
    if (i > 0) w = concat(w, hinv);
    w = concat(w, power(u, coeffs[i]));
  }
  w = concat(w, power(h, step * (long long)(deg - 1)));
  return w;
}

Word poly_word(const Symbol& u, const Symbol& h,
               const std::vector<long long>& coeffs, long long p,
               long long step) {
  return poly_word_base(Word::gen(u), Word::gen(h), coeffs, p, step);
}

}  // namespace pres
