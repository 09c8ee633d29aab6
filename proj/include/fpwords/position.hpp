#pragma once

#include <optional>
#include <vector>

#include "fpwords/errors.hpp"
#include "fpwords/groups.hpp"
#include "fpwords/words.hpp"

namespace fpwords {

// How often a pattern occurs as a cyclic subword of R and of R^-1. Starts
// range over one period, so a pattern of length l(R)-1 can still be counted
// at every rotation.
struct OccurrenceCounts {
  int in_word = 0;
  int in_inverse = 0;
  friend auto operator<=>(const OccurrenceCounts&, const OccurrenceCounts&) =
      default;
};

inline int count_cyclic_occurrences(const std::vector<Letter>& host,
                                    const std::vector<Letter>& pat) {
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pat.size());
  int count = 0;
  for (int s = 0; s < n; ++s) {
    bool hit = true;
    for (int i = 0; i < m; ++i) {
      if (cyclic_at(host, s + i) != pat[i]) {
        hit = false;
        break;
      }
    }
    if (hit) ++count;
  }
  return count;
}

inline OccurrenceCounts count_occurrences(const FreeProduct& fp,
                                          const CyclicWord& r,
                                          const std::vector<Letter>& pattern) {
  const int m = static_cast<int>(pattern.size());
  if (m < 1 || m > r.length() - 1)
    throw InputError("pattern length must be between 1 and l(R)-1");
  for (const Letter& l : pattern) {
    if (l.factor != 1 && l.factor != 2)
      throw InputError("letter factor must be 1 or 2");
    if (l.elem <= 0 || l.elem >= fp.factor(l.factor).size())
      throw InputError("pattern letter out of range for its factor");
  }
  if (!alternating(pattern))
    throw InputError("pattern must alternate factors");
  CyclicWord ri = invert(fp, r);
  return OccurrenceCounts{count_cyclic_occurrences(r.letters(), pattern),
                          count_cyclic_occurrences(ri.letters(), pattern)};
}

// Uniquely positioned: the pattern occurs exactly once in R and never in
// R^-1, so any copy of it inside a larger word pins down the position of R.
inline bool is_uniquely_positioned(const FreeProduct& fp, const CyclicWord& r,
                                   const std::vector<Letter>& pattern) {
  return count_occurrences(fp, r, pattern) == OccurrenceCounts{1, 0};
}

// A split of some rotation of R into two uniquely positioned halves.
// rotation says which rotation was split, split is the length of the first
// half within that rotation.
struct UpDecomposition {
  int rotation = 0;
  int split = 0;
  FPWord u;
  FPWord v;
};

// Search rotations in order, splits in order, and return the first split
// whose halves are both uniquely positioned. Proper powers can never have a
// uniquely positioned subword at all, so they are rejected up front.
inline std::optional<UpDecomposition> find_up_decomposition(
    const FreeProduct& fp, const CyclicWord& r) {
  if (is_proper_power(r).proper)
    throw InputError("word must not be a proper power");
  const int n = r.length();
  for (int k = 0; k < n; ++k) {
    CyclicWord w = rotate(r, k);
    for (int s = 1; s < n; ++s) {
      std::vector<Letter> u = cyclic_subword(w, 0, s);
      std::vector<Letter> v = cyclic_subword(w, s, n - s);
      if (is_uniquely_positioned(fp, r, u) &&
          is_uniquely_positioned(fp, r, v)) {
        return UpDecomposition{k, s, FPWord{std::move(u)},
                               FPWord{std::move(v)}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace fpwords
