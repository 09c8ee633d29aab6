#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpwords/classify.hpp"
#include "fpwords/errors.hpp"
#include "fpwords/groups.hpp"
#include "fpwords/position.hpp"
#include "fpwords/words.hpp"

namespace fpwords {

// Piece data for w = R^m. An occurrence of a subword is a (sign, start)
// pair: sign +1 means inside w, -1 means inside w^-1. Two occurrences are
// interchangeable exactly when they have the same sign and starts congruent
// mod n = l(R); a subword is a piece when it has two occurrences that are
// not interchangeable. Since w is periodic with period n, whether the
// subword at a start is a piece depends only on the start's residue, so one
// max-piece-length entry per residue captures everything.
struct PieceTable {
  int m = 0;
  int n = 0;
  int N = 0;
  std::vector<Letter> w;      // R^m written out
  std::vector<Letter> w_inv;  // (R^m)^-1 written out
  std::vector<int> max_len_pos;  // per residue, longest piece starting there in w
  std::vector<int> max_len_neg;  // same for w^-1

  bool is_piece(int sign, int start, int length) const {
    if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
    if (length < 1 || length > N - 1)
      throw InputError("piece length must be between 1 and l(R^m)-1");
    int r = ((start % n) + n) % n;
    return length <= (sign > 0 ? max_len_pos[r] : max_len_neg[r]);
  }
};

namespace detail {

// Longest run i with a[(sa+i) % n] == b[(sb+i) % n], capped. Both inputs
// have period n, so stepping mod n covers arbitrarily long matches.
inline int periodic_lcp(const std::vector<Letter>& a, int sa,
                        const std::vector<Letter>& b, int sb, int n, int cap) {
  int i = 0;
  while (i < cap && a[(sa + i) % n] == b[(sb + i) % n]) ++i;
  return i;
}

inline std::vector<int> max_piece_lengths(const std::vector<Letter>& host,
                                          const std::vector<Letter>& other,
                                          int n, int cap) {
  std::vector<int> out(n, 0);
  for (int r = 0; r < n; ++r) {
    int best = 0;
    for (int j = 0; j < n; ++j) {
      if (j != r) best = std::max(best, periodic_lcp(host, r, host, j, n, cap));
      best = std::max(best, periodic_lcp(host, r, other, j, n, cap));
    }
    out[r] = best;
  }
  return out;
}

}  // namespace detail

inline PieceTable build_piece_table(const FreeProduct& fp, const CyclicWord& r,
                                    int m) {
  if (m < 1) throw InputError("exponent m must be >= 1");
  PieceTable pt;
  pt.n = r.length();
  pt.m = m;
  pt.N = pt.n * m;
  CyclicWord ri = invert(fp, r);
  pt.w.reserve(pt.N);
  pt.w_inv.reserve(pt.N);
  for (int i = 0; i < pt.N; ++i) {
    pt.w.push_back(r.at(i % pt.n));
    pt.w_inv.push_back(ri.at(i % pt.n));
  }
  const int cap = pt.N - 1;
  pt.max_len_pos =
      detail::max_piece_lengths(r.letters(), ri.letters(), pt.n, cap);
  pt.max_len_neg =
      detail::max_piece_lengths(ri.letters(), r.letters(), pt.n, cap);
  return pt;
}

// One zone of a tiling: a piece (possibly empty) followed by a single
// junction letter.
struct TilingSegment {
  FPWord piece;
  Letter junction;
};

// A minimal cyclic cover of w by zones. anchor is the position of the
// junction closing the last segment; the first segment starts at anchor+1.
// d_min is the number of zones, which lower-bounds the degree of any
// interior region whose boundary spells a member of the symmetrized closure
// of w.
struct TilingResult {
  int d_min = 0;
  int anchor = 0;
  std::vector<TilingSegment> segments;
};

// Minimal cyclic tiling where the piece part starting at position p may use
// at most limits[p % n] letters. Tries every anchor; for a fixed anchor the
// suffix DP is O(N^2), so the whole search is O(N^3). A junction-only zone
// (empty piece) is always available, so a tiling always exists and
// d_min <= N.
inline TilingResult tile_with_limits(const std::vector<Letter>& w,
                                     const std::vector<int>& limits, int n) {
  const int N = static_cast<int>(w.size());
  if (N < 1) throw InputError("cannot tile an empty word");
  if (n < 1 || N % n != 0) throw InputError("period must divide the length");
  if (static_cast<int>(limits.size()) != n)
    throw InputError("need one piece limit per residue");
  for (int i = n; i < N; ++i)
    if (w[i] != w[i - n])
      throw InputError("word is not a power of the given period");

  int best_d = N + 1;
  int best_anchor = 0;
  std::vector<int> best_g;
  std::vector<int> g(N + 1, 0);
  for (int anchor = 0; anchor < N; ++anchor) {
    // offset i corresponds to position (anchor + 1 + i) % N
    g[N] = 0;
    for (int i = N - 1; i >= 0; --i) {
      int pos = (anchor + 1 + i) % N;
      int dmax = std::min(limits[pos % n] + 1, N - i);
      int best = g[i + 1];
      for (int d = 2; d <= dmax; ++d) best = std::min(best, g[i + d]);
      g[i] = 1 + best;
    }
    if (g[0] < best_d) {
      best_d = g[0];
      best_anchor = anchor;
      best_g = g;
    }
  }

  TilingResult out;
  out.d_min = best_d;
  out.anchor = best_anchor;
  int i = 0;
  while (i < N) {
    int pos = (best_anchor + 1 + i) % N;
    int dmax = std::min(limits[pos % n] + 1, N - i);
    int take = -1;
    for (int d = 1; d <= dmax; ++d) {
      if (1 + best_g[i + d] == best_g[i]) {
        take = d;
        break;
      }
    }
    if (take < 0) throw TheoremViolation("tiling reconstruction failed");
    TilingSegment seg;
    for (int k = 0; k < take - 1; ++k)
      seg.piece.letters.push_back(w[(pos + k) % N]);
    seg.junction = w[(pos + take - 1) % N];
    out.segments.push_back(std::move(seg));
    i += take;
  }
  return out;
}

inline TilingResult min_zone_tiling(const PieceTable& pt) {
  return tile_with_limits(pt.w, pt.max_len_pos, pt.n);
}

// Re-derive everything the tiling claims: the zones concatenate back to w
// read from anchor+1, every nonempty piece part really is a piece, and the
// zone count matches d_min.
inline bool validate_tiling(const PieceTable& pt, const TilingResult& t) {
  if (static_cast<int>(t.segments.size()) != t.d_min) return false;
  std::vector<Letter> concat;
  for (const TilingSegment& s : t.segments) {
    for (const Letter& l : s.piece.letters) concat.push_back(l);
    concat.push_back(s.junction);
  }
  if (static_cast<int>(concat.size()) != pt.N) return false;
  int pos = t.anchor + 1;
  for (int i = 0; i < pt.N; ++i)
    if (concat[i] != pt.w[(pos + i) % pt.N]) return false;
  int at = pos;
  for (const TilingSegment& s : t.segments) {
    int len = s.piece.length();
    if (len > 0 && !pt.is_piece(1, at, len)) return false;
    at += len + 1;
  }
  return true;
}

enum class C6Route {
  Tiling,            // every tiling of R^m needs >= 6 zones
  UniquePosition,    // R splits into two uniquely positioned halves
  SingleInvolution,  // R is conjugate to a M with M involution-free
  InvolutionPair,    // R is conjugate to a X b X^-1 with a^2 = b^2 = 1
  None,              // exceptional shape, not certified
};

inline std::string c6_route_tag(C6Route r) {
  switch (r) {
    case C6Route::Tiling:
      return "tiling";
    case C6Route::UniquePosition:
      return "unique-position";
    case C6Route::SingleInvolution:
      return "single-involution";
    case C6Route::InvolutionPair:
      return "involution-pair";
    case C6Route::None:
      return "none";
  }
  throw InputError("unknown route");
}

struct C6Status {
  bool certified = false;
  C6Route route = C6Route::None;
  int d_min = 0;
  std::optional<AxbxForm> exceptional_witness;
};

// Decide whether R^m satisfies C(6), m >= 3. The direct route measures the
// minimal zone tiling; when that is inconclusive (d_min < 6) the structural
// routes still certify C(6) for every shape except the exceptional one,
// which is reported uncertified with its witness. The exceptional test runs
// before the structural match because a word can satisfy a structural form
// at one rotation and the exceptional shape at another, and the exceptional
// shape wins.
inline C6Status c6_status(const FreeProduct& fp, const CyclicWord& r, int m) {
  if (m < 3) throw InputError("C(6) certification needs m >= 3");
  if (is_proper_power(r).proper)
    throw InputError("word must not be a proper power");
  TwoLengthReport tl = two_length(fp, r);
  if (tl.d2 > 2)
    throw InputError("C(6) certification covers only words with d2 <= 2");

  PieceTable pt = build_piece_table(fp, r, m);
  TilingResult t = min_zone_tiling(pt);
  C6Status out;
  out.d_min = t.d_min;
  if (t.d_min >= 6) {
    out.certified = true;
    out.route = C6Route::Tiling;
    return out;
  }
  if (auto exc = exceptional_form(fp, r)) {
    out.certified = false;
    out.route = C6Route::None;
    out.exceptional_witness = *exc;
    return out;
  }
  Classification c = classify(fp, r);
  if (std::holds_alternative<UpClass>(c)) {
    out.certified = true;
    out.route = C6Route::UniquePosition;
    return out;
  }
  if (std::holds_alternative<AmForm>(c)) {
    out.certified = true;
    out.route = C6Route::SingleInvolution;
    return out;
  }
  if (auto* ax = std::get_if<AxbxForm>(&c); ax && ax->b_involution) {
    out.certified = true;
    out.route = C6Route::InvolutionPair;
    return out;
  }
  throw TheoremViolation("no certification branch applies");
}

}  // namespace fpwords
