#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpwords/errors.hpp"
#include "fpwords/groups.hpp"

namespace fpwords {

// A reduced word in the free product: adjacent letters always come from
// different factors. May be empty (the identity). Comparison is
// lexicographic via Letter's order.
struct FPWord {
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  friend auto operator<=>(const FPWord&, const FPWord&) = default;
};

inline bool alternating(const std::vector<Letter>& ls) {
  for (size_t i = 0; i + 1 < ls.size(); ++i)
    if (ls[i].factor == ls[i + 1].factor) return false;
  return true;
}

// A cyclically reduced word: alternation holds around the cycle, which forces
// even length, and the minimum interesting length is 2. The constructor
// rejects anything else, so a CyclicWord is a trusted value everywhere
// downstream.
class CyclicWord {
 public:
  explicit CyclicWord(std::vector<Letter> ls) : letters_(std::move(ls)) {
    const int n = static_cast<int>(letters_.size());
    if (n < 2 || n % 2 != 0)
      throw InputError("cyclic words must have even length >= 2");
    for (int i = 0; i < n; ++i) {
      const Letter& l = letters_[i];
      if (l.factor != 1 && l.factor != 2)
        throw InputError("letter factor must be 1 or 2");
      if (l.elem <= 0) throw InputError("letters must be nontrivial elements");
      if (l.factor == letters_[(i + 1) % n].factor)
        throw InputError("adjacent letters must alternate factors cyclically");
    }
  }

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const Letter& at(int i) const {
    const int n = length();
    return letters_[((i % n) + n) % n];
  }

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// An unreduced syllable as written by the user: factor plus element index,
// identity allowed (it just vanishes during reduction).
struct RawLetter {
  int factor = 1;
  int elem = 0;
};

// Free reduction in the free product: drop identities, merge adjacent
// same-factor syllables through the group table, cancel when a merge hits
// the identity. One left-to-right pass with a stack is enough.
inline FPWord reduce(const FreeProduct& fp, const std::vector<RawLetter>& raws) {
  std::vector<Letter> out;
  for (const RawLetter& r : raws) {
    if (r.factor != 1 && r.factor != 2)
      throw InputError("letter factor must be 1 or 2");
    const GroupTable& g = fp.factor(r.factor);
    if (r.elem < 0 || r.elem >= g.size())
      throw InputError("element index out of range for its factor");
    if (r.elem == kIdentity) continue;
    if (!out.empty() && out.back().factor == r.factor) {
      int p = g.mult(out.back().elem, r.elem);
      out.pop_back();
      if (p != kIdentity) out.push_back(Letter{r.factor, p});
    } else {
      out.push_back(Letter{r.factor, r.elem});
    }
  }
  return FPWord{std::move(out)};
}

// Result of cyclic reduction: core is cyclically reduced (or shorter than 2),
// and conjugator * core * conjugator^-1 equals the input word.
struct CyclicReduction {
  FPWord core;
  FPWord conjugator;
};

inline CyclicReduction cyclically_reduce(const FreeProduct& fp, FPWord w) {
  std::vector<Letter> conj;
  while (w.length() >= 2 &&
         w.letters.front().factor == w.letters.back().factor) {
    Letter first = w.letters.front();
    Letter last = w.letters.back();
    int p = fp.mult(last, first);
    std::vector<Letter> mid(w.letters.begin() + 1, w.letters.end() - 1);
    if (p != kIdentity) {
      // first and last merge into one syllable; park it at the end where it
      // now sits between mid's tail and (cyclically) mid's head.
      mid.push_back(Letter{first.factor, p});
      conj.push_back(first);
      w.letters = std::move(mid);
      break;
    }
    conj.push_back(first);
    w.letters = std::move(mid);
  }
  return CyclicReduction{std::move(w), FPWord{std::move(conj)}};
}

// Narrow a reduced word into a CyclicWord, rejecting words that are not
// cyclically reduced or too short.
inline CyclicWord to_cyclic(const FPWord& w) { return CyclicWord(w.letters); }

inline CyclicWord rotate(const CyclicWord& w, int k) {
  const int n = w.length();
  k = ((k % n) + n) % n;
  std::vector<Letter> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(w.at(k + i));
  return CyclicWord(std::move(out));
}

inline FPWord invert(const FreeProduct& fp, const FPWord& w) {
  std::vector<Letter> out(w.letters.rbegin(), w.letters.rend());
  for (Letter& l : out) l = fp.inverse(l);
  return FPWord{std::move(out)};
}

inline CyclicWord invert(const FreeProduct& fp, const CyclicWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = fp.inverse(l);
  return CyclicWord(std::move(out));
}

inline Letter cyclic_at(const std::vector<Letter>& ls, int i) {
  const int n = static_cast<int>(ls.size());
  return ls[((i % n) + n) % n];
}

inline std::vector<Letter> cyclic_subword(const std::vector<Letter>& ls,
                                          int start, int len) {
  std::vector<Letter> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) out.push_back(cyclic_at(ls, start + i));
  return out;
}

inline std::vector<Letter> cyclic_subword(const CyclicWord& w, int start,
                                          int len) {
  return cyclic_subword(w.letters(), start, len);
}

// Proper-power detection: w is a proper power iff some rotation by a proper
// even divisor of its length reproduces it; the smallest such divisor gives
// the primitive root.
struct PowerCheck {
  bool proper = false;
  CyclicWord root;
  int exponent = 1;
};

inline PowerCheck is_proper_power(const CyclicWord& w) {
  const int n = w.length();
  for (int d = 2; d < n; d += 2) {
    if (n % d != 0) continue;
    if (rotate(w, d) == w) {
      std::vector<Letter> head(w.letters().begin(), w.letters().begin() + d);
      return PowerCheck{true, CyclicWord(std::move(head)), n / d};
    }
  }
  return PowerCheck{false, w, 1};
}

// All distinct cyclic words in the symmetrized orbit of w: every rotation of
// w and of w^-1, sorted and deduplicated.
inline std::vector<CyclicWord> sym_orbit(const FreeProduct& fp,
                                         const CyclicWord& w) {
  std::set<CyclicWord> seen;
  CyclicWord wi = invert(fp, w);
  for (int k = 0; k < w.length(); ++k) {
    seen.insert(rotate(w, k));
    seen.insert(rotate(wi, k));
  }
  return std::vector<CyclicWord>(seen.begin(), seen.end());
}

// Canonical representative of the symmetrized class: the lexicographically
// least member of the orbit, plus the orbit size.
struct SymClassRep {
  CyclicWord rep;
  int orbit_size = 0;
};

inline SymClassRep sym_closure_rep(const FreeProduct& fp, const CyclicWord& w) {
  std::vector<CyclicWord> orbit = sym_orbit(fp, w);
  return SymClassRep{orbit.front(), static_cast<int>(orbit.size())};
}

inline std::string render(const FreeProduct& fp,
                          const std::vector<Letter>& ls) {
  std::string out;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i > 0) out += ' ';
    out += fp.name(ls[i]);
  }
  return out;
}

inline std::string render(const FreeProduct& fp, const FPWord& w) {
  return render(fp, w.letters);
}

inline std::string render(const FreeProduct& fp, const CyclicWord& w) {
  return render(fp, w.letters());
}

}  // namespace fpwords
