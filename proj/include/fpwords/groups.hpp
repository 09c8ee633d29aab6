#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fpwords/errors.hpp"

namespace fpwords {

inline constexpr int kIdentity = 0;
inline constexpr int kMaxGroupSize = 64;

// A finite group given by its full multiplication table. Element 0 is always
// the identity. Construction validates the table exhaustively (closure,
// identity, inverses, associativity, Lagrange on element orders), so a
// GroupTable that exists is a group. Immutable afterwards; safe to share
// across threads.
class GroupTable {
 public:
  static GroupTable cyclic(int n, const std::string& base = "g") {
    if (n < 2) throw InputError("cyclic group needs n >= 2");
    GroupTable g;
    g.n_ = n;
    g.mult_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.mult_[g.index(i, j)] = (i + j) % n;
    g.names_.push_back("1");
    for (int i = 1; i < n; ++i)
      g.names_.push_back(i == 1 ? base : base + "^" + std::to_string(i));
    g.finalize();
    return g;
  }

  // (Z_2)^k; element i is the bitmask of generators it multiplies, so the
  // names b1, b2, b3 = b1*b2, b4, ... are stable under k.
  static GroupTable elementary_abelian_2(int k, const std::string& base = "b") {
    if (k < 1) throw InputError("elementary abelian 2-group needs k >= 1");
    if ((1 << k) > kMaxGroupSize) throw InputError("group size capped at 64");
    GroupTable g;
    g.n_ = 1 << k;
    g.mult_.assign(static_cast<size_t>(g.n_) * g.n_, 0);
    for (int i = 0; i < g.n_; ++i)
      for (int j = 0; j < g.n_; ++j) g.mult_[g.index(i, j)] = i ^ j;
    g.names_.push_back("1");
    for (int i = 1; i < g.n_; ++i) g.names_.push_back(base + std::to_string(i));
    g.finalize();
    return g;
  }

  // Rotations r^i at indices 0..n-1, reflections f*r^i at indices n..2n-1.
  static GroupTable dihedral(int n, const std::string& rot = "r",
                             const std::string& refl = "f") {
    if (n < 3) throw InputError("dihedral group needs n >= 3");
    if (2 * n > kMaxGroupSize) throw InputError("group size capped at 64");
    GroupTable g;
    g.n_ = 2 * n;
    g.mult_.assign(static_cast<size_t>(g.n_) * g.n_, 0);
    auto id = [n](bool flip, int i) { return (flip ? n : 0) + ((i % n + n) % n); };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        g.mult_[g.index(id(false, i), id(false, j))] = id(false, i + j);
        g.mult_[g.index(id(false, i), id(true, j))] = id(true, j - i);
        g.mult_[g.index(id(true, i), id(false, j))] = id(true, i + j);
        g.mult_[g.index(id(true, i), id(true, j))] = id(false, j - i);
      }
    }
    g.names_.push_back("1");
    for (int i = 1; i < n; ++i)
      g.names_.push_back(i == 1 ? rot : rot + "^" + std::to_string(i));
    g.names_.push_back(refl);
    for (int i = 1; i < n; ++i)
      g.names_.push_back(i == 1 ? refl + rot : refl + rot + "^" + std::to_string(i));
    g.finalize();
    return g;
  }

  static GroupTable from_table(const std::vector<std::vector<int>>& mult,
                               std::vector<std::string> names = {}) {
    const int n = static_cast<int>(mult.size());
    if (n < 2) throw InputError("factor groups must be nontrivial (size >= 2)");
    if (n > kMaxGroupSize) throw InputError("group size capped at 64");
    GroupTable g;
    g.n_ = n;
    g.mult_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(mult[i].size()) != n)
        throw InputError("multiplication table is not square");
      for (int j = 0; j < n; ++j) {
        int v = mult[i][j];
        if (v < 0 || v >= n) throw InputError("table entry out of range");
        g.mult_[g.index(i, j)] = v;
      }
    }
    if (names.empty()) {
      names.push_back("1");
      for (int i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(names.size()) != n)
      throw InputError("need one name per element");
    g.names_ = std::move(names);
    g.finalize();
    return g;
  }

  GroupTable with_names(std::vector<std::string> names) const {
    GroupTable g = *this;
    if (static_cast<int>(names.size()) != n_)
      throw InputError("need one name per element");
    g.names_ = std::move(names);
    g.check_names();
    return g;
  }

  int size() const { return n_; }
  int mult(int x, int y) const {
    check_elem(x);
    check_elem(y);
    return mult_[index(x, y)];
  }
  int inverse(int x) const {
    check_elem(x);
    return inv_[x];
  }
  int order(int x) const {
    check_elem(x);
    return order_[x];
  }
  const std::string& name(int x) const {
    check_elem(x);
    return names_[x];
  }

 private:
  GroupTable() = default;

  size_t index(int x, int y) const { return static_cast<size_t>(x) * n_ + y; }

  void check_elem(int x) const {
    if (x < 0 || x >= n_) throw InputError("element index out of range");
  }

  void check_names() const {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (static_cast<int>(seen.size()) != n_)
      throw InputError("element names within a group must be distinct");
    for (const auto& s : names_)
      if (s.empty()) throw InputError("element names must be nonempty");
  }

  void finalize() {
    if (n_ < 2) throw InputError("factor groups must be nontrivial (size >= 2)");
    if (n_ > kMaxGroupSize) throw InputError("group size capped at 64");
    for (int x = 0; x < n_; ++x)
      if (mult_[index(kIdentity, x)] != x || mult_[index(x, kIdentity)] != x)
        throw InputError("element 0 is not a two-sided identity");
    inv_.assign(n_, -1);
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (mult_[index(x, y)] == kIdentity && mult_[index(y, x)] == kIdentity) {
          inv_[x] = y;
          break;
        }
      }
      if (inv_[x] < 0) throw InputError("element without a two-sided inverse");
    }
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z)
          if (mult_[index(mult_[index(x, y)], z)] !=
              mult_[index(x, mult_[index(y, z)])])
            throw InputError("multiplication table is not associative");
    order_.assign(n_, 0);
    for (int x = 0; x < n_; ++x) {
      int p = x, k = 1;
      while (p != kIdentity) {
        p = mult_[index(p, x)];
        ++k;
        if (k > n_) throw InputError("element power never reaches the identity");
      }
      order_[x] = k;
      if (n_ % k != 0) throw InputError("element order does not divide group size");
    }
    check_names();
  }

  int n_ = 0;
  std::vector<int> mult_;
  std::vector<std::string> names_;
  std::vector<int> inv_;
  std::vector<int> order_;
};

// One nontrivial element of one of the two factors. The identity is never a
// letter. Ordered by (factor, element index); this order fixes every
// canonical form and tie-break downstream.
struct Letter {
  int factor = 1;  // 1 or 2
  int elem = 1;    // element index in that factor's table, never 0
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// The ambient free product G1 * G2: owns the two factor tables and answers
// letter-level queries.
class FreeProduct {
 public:
  FreeProduct(GroupTable g1, GroupTable g2)
      : g1_(std::move(g1)), g2_(std::move(g2)) {}

  const GroupTable& factor(int f) const {
    if (f == 1) return g1_;
    if (f == 2) return g2_;
    throw InputError("factor index must be 1 or 2");
  }

  Letter letter(int f, int e) const {
    const GroupTable& g = factor(f);
    if (e <= 0 || e >= g.size())
      throw InputError("letter must be a nontrivial element of its factor");
    return Letter{f, e};
  }

  Letter inverse(Letter l) const {
    return Letter{l.factor, factor(l.factor).inverse(l.elem)};
  }

  int order(Letter l) const { return factor(l.factor).order(l.elem); }

  bool involution(Letter l) const { return order(l) == 2; }

  // Product of two same-factor letters; the result may be the identity index.
  int mult(Letter x, Letter y) const {
    if (x.factor != y.factor)
      throw InputError("cannot multiply letters from different factors");
    return factor(x.factor).mult(x.elem, y.elem);
  }

  const std::string& name(Letter l) const { return factor(l.factor).name(l.elem); }

 private:
  GroupTable g1_;
  GroupTable g2_;
};

}  // namespace fpwords
