#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpwords/errors.hpp"
#include "fpwords/groups.hpp"
#include "fpwords/position.hpp"
#include "fpwords/words.hpp"

namespace fpwords {

// Occurrence counts per involution letter, and their maximum. Only letters
// of order 2 contribute; a word with no involutions has d2 = 0.
struct TwoLengthReport {
  std::map<Letter, int> counts;
  int d2 = 0;
};

inline TwoLengthReport two_length(const FreeProduct& fp, const CyclicWord& r) {
  TwoLengthReport rep;
  for (const Letter& l : r.letters()) {
    if (fp.involution(l)) {
      int c = ++rep.counts[l];
      if (c > rep.d2) rep.d2 = c;
    }
  }
  return rep;
}

// Rotation of R cut at every occurrence of one involution a: the rotation
// starts at the first occurrence, and segments are the (possibly empty
// alternation-wise, but in fact nonempty odd-length) runs between
// consecutive occurrences.
struct MarkerDecomposition {
  Letter marker;
  int rotation = 0;
  std::vector<FPWord> segments;
};

inline MarkerDecomposition marker_decomposition(const FreeProduct& fp,
                                                const CyclicWord& r,
                                                Letter a) {
  if (!fp.involution(a)) throw InputError("marker letter must have order 2");
  const int n = r.length();
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (r.at(i) == a) {
      first = i;
      break;
    }
  }
  if (first < 0) throw InputError("marker letter does not occur in the word");
  CyclicWord w = rotate(r, first);
  MarkerDecomposition out{a, first, {}};
  std::vector<Letter> seg;
  for (int i = 1; i < n; ++i) {
    if (w.at(i) == a) {
      out.segments.push_back(FPWord{std::move(seg)});
      seg.clear();
    } else {
      seg.push_back(w.at(i));
    }
  }
  out.segments.push_back(FPWord{std::move(seg)});
  return out;
}

// R is conjugate to a M with a an involution and M free of involutions.
struct AmForm {
  int rotation = 0;
  Letter a;
  FPWord m;
};

inline std::optional<AmForm> match_form_am(const FreeProduct& fp,
                                           const CyclicWord& r) {
  const int n = r.length();
  for (int k = 0; k < n; ++k) {
    CyclicWord w = rotate(r, k);
    if (!fp.involution(w.at(0))) continue;
    bool clean = true;
    for (int i = 1; i < n; ++i) {
      if (fp.involution(w.at(i))) {
        clean = false;
        break;
      }
    }
    if (clean) {
      return AmForm{k, w.at(0),
                    FPWord{std::vector<Letter>(w.letters().begin() + 1,
                                               w.letters().end())}};
    }
  }
  return std::nullopt;
}

// R is conjugate to a X b X^-1 with a an involution. Note b may or may not
// be an involution and X may be empty (length 2 words a b).
struct AxbxForm {
  int rotation = 0;
  Letter a;
  FPWord x;
  Letter b;
  bool b_involution = false;
};

inline std::optional<AxbxForm> match_form_axbx(const FreeProduct& fp,
                                               const CyclicWord& r) {
  const int n = r.length();
  const int half = (n - 2) / 2;
  for (int k = 0; k < n; ++k) {
    CyclicWord w = rotate(r, k);
    if (!fp.involution(w.at(0))) continue;
    // positions: a at 0, X at 1..half, b at half+1, X^-1 at half+2..n-1
    bool mirror = true;
    for (int j = 1; j <= half; ++j) {
      if (w.at(n - j) != fp.inverse(w.at(j))) {
        mirror = false;
        break;
      }
    }
    if (!mirror) continue;
    Letter b = w.at(half + 1);
    return AxbxForm{k, w.at(0),
                    FPWord{cyclic_subword(w, 1, half)}, b, fp.involution(b)};
  }
  return std::nullopt;
}

// Exceptional shape: conjugate to a X b X^-1 where a^2 = 1 but b^2 != 1.
// This is exactly the shape the small-cancellation certificates below cannot
// reach, so it gets its own detector that keeps scanning past
// involution-pair matches.
inline std::optional<AxbxForm> exceptional_form(const FreeProduct& fp,
                                                const CyclicWord& r) {
  const int n = r.length();
  const int half = (n - 2) / 2;
  for (int k = 0; k < n; ++k) {
    CyclicWord w = rotate(r, k);
    if (!fp.involution(w.at(0))) continue;
    bool mirror = true;
    for (int j = 1; j <= half; ++j) {
      if (w.at(n - j) != fp.inverse(w.at(j))) {
        mirror = false;
        break;
      }
    }
    if (!mirror) continue;
    Letter b = w.at(half + 1);
    if (!fp.involution(b)) {
      return AxbxForm{k, w.at(0), FPWord{cyclic_subword(w, 1, half)}, b,
                      false};
    }
  }
  return std::nullopt;
}

inline bool is_exceptional(const FreeProduct& fp, const CyclicWord& r) {
  return exceptional_form(fp, r).has_value();
}

struct UpClass {
  UpDecomposition decomposition;
};

struct OutOfScope {
  int d2 = 0;
};

// Structural trichotomy for words with d2 <= 2: either the word splits into
// two uniquely positioned halves, or it is conjugate to a M with M
// involution-free, or it is conjugate to a X b X^-1. Words with d2 > 2 are
// out of scope. Reaching none of the branches would contradict the
// underlying structure theorem, so that case throws.
using Classification = std::variant<UpClass, AmForm, AxbxForm, OutOfScope>;

inline Classification classify(const FreeProduct& fp, const CyclicWord& r) {
  if (is_proper_power(r).proper)
    throw InputError("word must not be a proper power");
  TwoLengthReport tl = two_length(fp, r);
  if (tl.d2 > 2) return OutOfScope{tl.d2};
  if (auto up = find_up_decomposition(fp, r)) return UpClass{*up};
  if (auto am = match_form_am(fp, r)) return *am;
  if (auto ax = match_form_axbx(fp, r)) return *ax;
  throw TheoremViolation("in-scope word matched no classification branch");
}

inline std::string classification_tag(const Classification& c) {
  if (std::holds_alternative<UpClass>(c)) return "unique-position";
  if (std::holds_alternative<AmForm>(c)) return "aM";
  if (std::holds_alternative<AxbxForm>(c)) return "aXbX";
  return "out-of-scope";
}

// Independently re-check everything a classification claims about the word:
// witnesses must spell the rotated word exactly and satisfy their defining
// properties. Returns a list of problems; empty means the witness stands.
inline std::vector<std::string> verify_classification(const FreeProduct& fp,
                                                      const CyclicWord& r,
                                                      const Classification& c) {
  std::vector<std::string> problems;
  const int n = r.length();
  auto spells = [&](int rot, const std::vector<Letter>& built) {
    if (static_cast<int>(built.size()) != n) return false;
    CyclicWord w = rotate(r, rot);
    for (int i = 0; i < n; ++i)
      if (built[i] != w.at(i)) return false;
    return true;
  };
  if (const auto* up = std::get_if<UpClass>(&c)) {
    const UpDecomposition& d = up->decomposition;
    if (d.u.empty() || d.v.empty()) problems.push_back("a half is empty");
    std::vector<Letter> built = d.u.letters;
    built.insert(built.end(), d.v.letters.begin(), d.v.letters.end());
    if (!spells(d.rotation, built))
      problems.push_back("halves do not spell the rotated word");
    if (!d.u.empty() && !is_uniquely_positioned(fp, r, d.u.letters))
      problems.push_back("first half is not uniquely positioned");
    if (!d.v.empty() && !is_uniquely_positioned(fp, r, d.v.letters))
      problems.push_back("second half is not uniquely positioned");
  } else if (const auto* am = std::get_if<AmForm>(&c)) {
    if (!fp.involution(am->a))
      problems.push_back("head letter is not an involution");
    for (const Letter& l : am->m.letters) {
      if (fp.involution(l)) {
        problems.push_back("tail contains an involution");
        break;
      }
    }
    std::vector<Letter> built{am->a};
    built.insert(built.end(), am->m.letters.begin(), am->m.letters.end());
    if (!spells(am->rotation, built))
      problems.push_back("aM witness does not spell the rotated word");
  } else if (const auto* ax = std::get_if<AxbxForm>(&c)) {
    if (!fp.involution(ax->a))
      problems.push_back("head letter is not an involution");
    if (ax->b_involution != fp.involution(ax->b))
      problems.push_back("middle letter order flag is wrong");
    std::vector<Letter> built{ax->a};
    built.insert(built.end(), ax->x.letters.begin(), ax->x.letters.end());
    built.push_back(ax->b);
    for (auto it = ax->x.letters.rbegin(); it != ax->x.letters.rend(); ++it)
      built.push_back(fp.inverse(*it));
    if (!spells(ax->rotation, built))
      problems.push_back("aXbX witness does not spell the rotated word");
  } else if (const auto* oos = std::get_if<OutOfScope>(&c)) {
    TwoLengthReport tl = two_length(fp, r);
    if (oos->d2 != tl.d2 || tl.d2 <= 2)
      problems.push_back("out-of-scope tag disagrees with the two-length");
  }
  return problems;
}

// Witness for the single-involution criterion: some member w' of the
// symmetrized class reads a X x Y y X^-1 with a an involution, x, y single
// letters, Y nonempty and x != y^-1. flank is X, middle is Y.
struct UpCriterionWitness {
  int rotation = 0;
  bool inverted = false;
  Letter head;
  FPWord flank;
  Letter left_sep;
  FPWord middle;
  Letter right_sep;
};

struct UpCriterionResult {
  bool holds = false;
  std::optional<UpCriterionWitness> witness;
};

// Criterion for words whose single involution occurs once (d2 = 1): the word
// admits a decomposition into two uniquely positioned halves iff its length
// exceeds 2 and the witness shape above appears somewhere in the symmetrized
// class. Callers must check up front that d2 is exactly 1 and the word is
// primitive; anything else is a usage error.
inline UpCriterionResult up_criterion(const FreeProduct& fp,
                                      const CyclicWord& r) {
  if (is_proper_power(r).proper)
    throw InputError("word must not be a proper power");
  if (two_length(fp, r).d2 != 1)
    throw InputError("criterion applies only to words with d2 = 1");
  const int n = r.length();
  if (n <= 2) return UpCriterionResult{false, std::nullopt};
  CyclicWord ri = invert(fp, r);
  for (int pass = 0; pass < 2; ++pass) {
    const CyclicWord& base = (pass == 0) ? r : ri;
    for (int k = 0; k < n; ++k) {
      CyclicWord w = rotate(base, k);
      if (!fp.involution(w.at(0))) continue;
      // a X x Y y X^-1 with |x| = |y| = 1; flank length L ranges so that Y
      // keeps length >= 1: 1 + L + 1 + |Y| + 1 + L = n.
      for (int L = 0; 2 * L + 4 <= n; ++L) {
        bool mirror = true;
        for (int j = 1; j <= L; ++j) {
          if (w.at(n - j) != fp.inverse(w.at(j))) {
            mirror = false;
            break;
          }
        }
        if (!mirror) break;
        Letter x = w.at(1 + L);
        Letter y = w.at(n - 1 - L);
        if (x == fp.inverse(y)) continue;
        UpCriterionWitness wit;
        wit.rotation = k;
        wit.inverted = (pass == 1);
        wit.head = w.at(0);
        wit.flank = FPWord{cyclic_subword(w, 1, L)};
        wit.left_sep = x;
        wit.middle = FPWord{cyclic_subword(w, 2 + L, n - 3 - 2 * L)};
        wit.right_sep = y;
        return UpCriterionResult{true, std::move(wit)};
      }
    }
  }
  return UpCriterionResult{false, std::nullopt};
}

}  // namespace fpwords
