#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpwords/cancellation.hpp"
#include "fpwords/classify.hpp"
#include "fpwords/errors.hpp"
#include "fpwords/groups.hpp"
#include "fpwords/position.hpp"
#include "fpwords/words.hpp"

namespace fpwords {

struct EnumFilters {
  bool not_proper_power = true;
  std::optional<int> d2_max;
  std::optional<int> d2_exact;
};

struct EnumSpec {
  int max_length = 2;
  int m = 3;  // exponent used by the tiling checks
  EnumFilters filters;
};

// Hard cap on generated raw sequences per run; larger requests are refused
// with the estimate so the tool stays desk-scale by construction.
inline constexpr long long kRawSequenceCap = 10'000'000;

inline long long raw_sequence_estimate(const FreeProduct& fp, int max_length) {
  const long long k = static_cast<long long>(fp.factor(1).size() - 1) *
                      (fp.factor(2).size() - 1);
  long double total = 0, per = 1;
  for (int len = 2; len <= max_length; len += 2) {
    per *= k;
    total += 2 * per;
  }
  if (total > static_cast<long double>(kRawSequenceCap) * 10)
    return kRawSequenceCap * 10;
  return static_cast<long long>(total);
}

inline void check_enum_spec(const FreeProduct& fp, const EnumSpec& spec) {
  if (spec.max_length < 2 || spec.max_length % 2 != 0)
    throw InputError("max_length must be an even integer >= 2");
  if (spec.m < 3) throw InputError("exponent m must be >= 3");
  if (spec.filters.d2_max && *spec.filters.d2_max < 0)
    throw InputError("d2_max filter must be >= 0");
  if (spec.filters.d2_exact && *spec.filters.d2_exact < 0)
    throw InputError("d2_exact filter must be >= 0");
  long long est = raw_sequence_estimate(fp, spec.max_length);
  if (est > kRawSequenceCap)
    throw InputError("enumeration would visit about " + std::to_string(est) +
                     " raw sequences; the cap is " +
                     std::to_string(kRawSequenceCap));
}

// Per-length bookkeeping. raw_* count sequences with both starting factors;
// the generator only walks sequences starting in factor 1 and doubles,
// which is exact because rotation by one letter is a parity-swapping
// bijection that preserves every filter.
struct LengthStats {
  int length = 0;
  long long raw_sequences = 0;
  long long raw_kept = 0;
  int classes = 0;
  long long sum_orbit = 0;
};

struct EnumResult {
  std::vector<SymClassRep> classes;  // length-major, then representative order
  std::vector<LengthStats> stats;
};

// Generate every alternating sequence of each even length up to the cap,
// filter, and collapse to canonical class representatives. The
// raw_kept / sum_orbit pair in the stats is a completeness oracle: each
// kept class accounts for exactly orbit_size raw sequences.
inline EnumResult enumerate_classes(const FreeProduct& fp,
                                    const EnumSpec& spec) {
  check_enum_spec(fp, spec);
  const int k1 = fp.factor(1).size() - 1;
  const int k2 = fp.factor(2).size() - 1;
  EnumResult out;
  for (int len = 2; len <= spec.max_length; len += 2) {
    std::map<CyclicWord, int> reps;
    long long raw1 = 0;
    long long kept1 = 0;
    std::vector<int> digits(len, 1);
    while (true) {
      ++raw1;
      std::vector<Letter> ls(len);
      for (int i = 0; i < len; ++i)
        ls[i] = Letter{i % 2 == 0 ? 1 : 2, digits[i]};
      CyclicWord w(std::move(ls));
      bool keep = true;
      if (spec.filters.not_proper_power && is_proper_power(w).proper)
        keep = false;
      if (keep && (spec.filters.d2_max || spec.filters.d2_exact)) {
        int d2 = two_length(fp, w).d2;
        if (spec.filters.d2_max && d2 > *spec.filters.d2_max) keep = false;
        if (keep && spec.filters.d2_exact && d2 != *spec.filters.d2_exact)
          keep = false;
      }
      if (keep) {
        ++kept1;
        SymClassRep rep = sym_closure_rep(fp, w);
        reps.emplace(rep.rep, rep.orbit_size);
      }
      int i = len - 1;
      while (i >= 0) {
        int limit = (i % 2 == 0) ? k1 : k2;
        if (digits[i] < limit) {
          ++digits[i];
          break;
        }
        digits[i] = 1;
        --i;
      }
      if (i < 0) break;
    }
    LengthStats st;
    st.length = len;
    st.raw_sequences = 2 * raw1;
    st.raw_kept = 2 * kept1;
    st.classes = static_cast<int>(reps.size());
    for (const auto& [rep, orbit] : reps) {
      out.classes.push_back(SymClassRep{rep, orbit});
      st.sum_orbit += orbit;
    }
    out.stats.push_back(st);
  }
  return out;
}

// Bucket for the sweep histogram. The structural categories overlap (an
// exceptional word may also match aM at another rotation), so buckets are
// made disjoint by a fixed priority: out-of-scope, then exceptional, then
// the classifier's own branch order.
inline std::string histogram_bucket(const FreeProduct& fp, const CyclicWord& r,
                                    const Classification& c) {
  if (std::holds_alternative<OutOfScope>(c)) return "out-of-scope";
  if (is_exceptional(fp, r)) return "exceptional";
  if (std::holds_alternative<UpClass>(c)) return "unique-position";
  if (std::holds_alternative<AmForm>(c)) return "aM";
  return "aXbX";
}

inline const std::vector<std::string>& histogram_buckets() {
  static const std::vector<std::string> keys = {
      "unique-position", "aM", "aXbX", "exceptional", "out-of-scope"};
  return keys;
}

struct VerificationReport {
  EnumSpec spec;
  std::vector<LengthStats> stats;
  int classes_total = 0;
  std::map<std::string, int> histogram;
  int up_tiling_checked = 0;
  std::optional<int> up_tiling_min_d;
  std::vector<std::string> tiling_failures;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty() && tiling_failures.empty(); }
};

// Classify every enumerated class, independently re-verify each witness,
// and run the tiling bound on every class with a unique-position split:
// no piece of R^m covers a whole half, so each of the 2m half-blocks needs
// its own junction and d_min must reach 2m. Classification failures are
// collected as data, never thrown.
inline VerificationReport classification_sweep(const FreeProduct& fp,
                                               EnumSpec spec) {
  spec.filters.not_proper_power = true;
  VerificationReport rep;
  rep.spec = spec;
  EnumResult en = enumerate_classes(fp, spec);
  rep.stats = en.stats;
  rep.classes_total = static_cast<int>(en.classes.size());
  for (const std::string& key : histogram_buckets()) rep.histogram[key] = 0;
  for (const SymClassRep& cls : en.classes) {
    const CyclicWord& r = cls.rep;
    const std::string shown = render(fp, r);
    try {
      Classification c = classify(fp, r);
      for (const std::string& p : verify_classification(fp, r, c))
        rep.violations.push_back(shown + ": " + p);
      rep.histogram[histogram_bucket(fp, r, c)] += 1;
      if (std::holds_alternative<UpClass>(c)) {
        PieceTable pt = build_piece_table(fp, r, spec.m);
        TilingResult t = min_zone_tiling(pt);
        if (!validate_tiling(pt, t))
          rep.violations.push_back(shown + ": tiling witness failed validation");
        rep.up_tiling_checked += 1;
        if (!rep.up_tiling_min_d || t.d_min < *rep.up_tiling_min_d)
          rep.up_tiling_min_d = t.d_min;
        if (t.d_min < 2 * spec.m)
          rep.tiling_failures.push_back(shown + ": d_min " +
                                        std::to_string(t.d_min) + " < " +
                                        std::to_string(2 * spec.m));
      }
    } catch (const TheoremViolation& e) {
      rep.violations.push_back(shown + ": " + e.what());
    }
  }
  for (const LengthStats& st : en.stats) {
    if (st.raw_kept != st.sum_orbit)
      rep.violations.push_back(
          "length " + std::to_string(st.length) + ": orbit sizes sum to " +
          std::to_string(st.sum_orbit) + " but " + std::to_string(st.raw_kept) +
          " raw sequences were kept");
  }
  return rep;
}

struct CriterionAgreementReport {
  EnumSpec spec;
  int classes_total = 0;
  int agreements = 0;
  // criterion matched but brute force found no decomposition
  std::vector<std::string> criterion_only;
  // brute force found a decomposition the criterion missed
  std::vector<std::string> decomposition_only;

  bool passed() const {
    return criterion_only.empty() && decomposition_only.empty();
  }
};

// Compare the single-involution witness criterion against brute-force
// search for a unique-position split, over every class with d2 = 1. Both
// directions are recorded separately; brute force is the ground truth.
inline CriterionAgreementReport criterion_agreement(const FreeProduct& fp,
                                                    EnumSpec spec) {
  spec.filters.not_proper_power = true;
  spec.filters.d2_exact = 1;
  CriterionAgreementReport rep;
  rep.spec = spec;
  EnumResult en = enumerate_classes(fp, spec);
  rep.classes_total = static_cast<int>(en.classes.size());
  for (const SymClassRep& cls : en.classes) {
    bool crit = up_criterion(fp, cls.rep).holds;
    bool split = find_up_decomposition(fp, cls.rep).has_value();
    if (crit == split) {
      rep.agreements += 1;
    } else if (crit) {
      rep.criterion_only.push_back(render(fp, cls.rep));
    } else {
      rep.decomposition_only.push_back(render(fp, cls.rep));
    }
  }
  return rep;
}

struct InvolutionFamilyReport {
  int n = 0;
  CyclicWord word;
  int d2 = 0;
  std::optional<UpDecomposition> up;
  bool mirror_found = false;  // involution-headed a X b X^-1 on S or S^-1
  std::string classification;
  std::vector<std::string> problems;

  bool passed() const { return problems.empty(); }
};

// The boundary family S = a b1 a b2 ... a bn over Z2 * G2 with distinct
// involutions b_i. Its two-length is n, so for n > 2 it sits outside the
// d2 <= 2 classification, and no rotation of S or S^-1 matches an
// involution-headed mirror form (the b_i read in opposite cyclic orders).
// For n = 2 the aXbX branch fires. A unique-position split exists exactly
// when each half can take two of the b_i, i.e. for n >= 4: an ascending
// run of two or more b's pins its occurrence and never reappears in S^-1,
// where the runs descend, while a half carrying at most one b always
// reappears there. The report records all of that with brute force.
inline InvolutionFamilyReport involution_family_report(const FreeProduct& fp,
                                                       int n) {
  if (n < 2) throw InputError("family needs n >= 2");
  if (fp.factor(1).size() != 2)
    throw InputError("first factor must be the two-element group");
  const GroupTable& g2 = fp.factor(2);
  std::vector<Letter> invs;
  for (int e = 1; e < g2.size() && static_cast<int>(invs.size()) < n; ++e)
    if (g2.order(e) == 2) invs.push_back(Letter{2, e});
  if (static_cast<int>(invs.size()) < n)
    throw InputError("second factor has fewer than n involutions");
  std::vector<Letter> ls;
  ls.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    ls.push_back(Letter{1, 1});
    ls.push_back(invs[i]);
  }
  CyclicWord s(std::move(ls));
  InvolutionFamilyReport rep{n, s};
  rep.d2 = two_length(fp, s).d2;
  if (rep.d2 != n)
    rep.problems.push_back("expected two-length " + std::to_string(n) +
                           ", got " + std::to_string(rep.d2));
  rep.up = find_up_decomposition(fp, s);
  rep.mirror_found = match_form_axbx(fp, s).has_value() ||
                     match_form_axbx(fp, invert(fp, s)).has_value();
  rep.classification = classification_tag(classify(fp, s));
  if (n == 2) {
    if (rep.classification != "aXbX")
      rep.problems.push_back("expected the aXbX branch to fire");
  } else {
    if (rep.mirror_found)
      rep.problems.push_back("unexpected involution-headed mirror form");
    if (rep.classification != "out-of-scope")
      rep.problems.push_back("expected out-of-scope classification");
  }
  if (n <= 3 && rep.up)
    rep.problems.push_back("unexpected unique-position decomposition");
  if (n >= 4 && !rep.up)
    rep.problems.push_back("expected a unique-position decomposition");
  return rep;
}

}  // namespace fpwords
