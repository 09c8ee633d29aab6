#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fpwords/cancellation.hpp"
#include "fpwords/classify.hpp"
#include "fpwords/enumerate.hpp"
#include "fpwords/groups.hpp"
#include "fpwords/position.hpp"
#include "fpwords/words.hpp"

namespace fpwords {

using ordered_json = nlohmann::ordered_json;

inline ordered_json letters_json(const FreeProduct& fp,
                                 const std::vector<Letter>& ls) {
  ordered_json a = ordered_json::array();
  for (const Letter& l : ls) a.push_back(fp.name(l));
  return a;
}

inline ordered_json letters_json(const FreeProduct& fp, const FPWord& w) {
  return letters_json(fp, w.letters);
}

inline ordered_json letters_json(const FreeProduct& fp, const CyclicWord& w) {
  return letters_json(fp, w.letters());
}

inline ordered_json classification_json(const FreeProduct& fp,
                                        const Classification& c) {
  ordered_json j;
  j["tag"] = classification_tag(c);
  if (const auto* up = std::get_if<UpClass>(&c)) {
    j["rotation"] = up->decomposition.rotation;
    j["split"] = up->decomposition.split;
    j["u"] = letters_json(fp, up->decomposition.u);
    j["v"] = letters_json(fp, up->decomposition.v);
  } else if (const auto* am = std::get_if<AmForm>(&c)) {
    j["rotation"] = am->rotation;
    j["a"] = fp.name(am->a);
    j["m"] = letters_json(fp, am->m);
  } else if (const auto* ax = std::get_if<AxbxForm>(&c)) {
    j["rotation"] = ax->rotation;
    j["a"] = fp.name(ax->a);
    j["x"] = letters_json(fp, ax->x);
    j["b"] = fp.name(ax->b);
    j["b_order2"] = ax->b_involution;
  } else if (const auto* oos = std::get_if<OutOfScope>(&c)) {
    j["d2"] = oos->d2;
  }
  return j;
}

inline ordered_json pieces_json(const PieceTable& pt) {
  ordered_json j;
  j["n"] = pt.n;
  j["m"] = pt.m;
  j["N"] = pt.N;
  j["max_piece_length"] = {{"word", pt.max_len_pos},
                           {"inverse", pt.max_len_neg}};
  return j;
}

inline ordered_json tiling_json(const FreeProduct& fp, const TilingResult& t) {
  ordered_json j;
  j["d_min"] = t.d_min;
  j["anchor"] = t.anchor;
  ordered_json segs = ordered_json::array();
  for (const TilingSegment& s : t.segments) {
    ordered_json seg;
    seg["piece"] = letters_json(fp, s.piece);
    seg["junction"] = fp.name(s.junction);
    segs.push_back(std::move(seg));
  }
  j["segments"] = std::move(segs);
  return j;
}

inline ordered_json c6_json(const FreeProduct& fp, const C6Status& s) {
  ordered_json j;
  j["certified"] = s.certified;
  j["route"] = c6_route_tag(s.route);
  j["d_min"] = s.d_min;
  if (s.exceptional_witness) {
    const AxbxForm& w = *s.exceptional_witness;
    j["exceptional_witness"] = {{"a", fp.name(w.a)},
                                {"x", letters_json(fp, w.x)},
                                {"b", fp.name(w.b)}};
  }
  return j;
}

// Full per-word report. The word field is the cyclic core spelled as letter
// names, so it can be fed straight back in as a word literal; doing that
// reproduces this object byte for byte.
inline ordered_json analyze_json(const FreeProduct& fp, const CyclicWord& r,
                                 int m) {
  ordered_json j;
  j["word"] = letters_json(fp, r);
  j["length"] = r.length();
  TwoLengthReport tl = two_length(fp, r);
  j["d2"] = tl.d2;
  ordered_json counts = ordered_json::object();
  for (const auto& [letter, count] : tl.counts) counts[fp.name(letter)] = count;
  j["counts"] = std::move(counts);
  if (tl.d2 > 0) {
    Letter marker = tl.counts.begin()->first;
    for (const auto& [letter, count] : tl.counts) {
      if (count == tl.d2) {
        marker = letter;
        break;
      }
    }
    MarkerDecomposition md = marker_decomposition(fp, r, marker);
    ordered_json segs = ordered_json::array();
    for (const FPWord& seg : md.segments) segs.push_back(letters_json(fp, seg));
    j["marker"] = {{"letter", fp.name(md.marker)},
                   {"rotation", md.rotation},
                   {"segments", std::move(segs)}};
  } else {
    j["marker"] = nullptr;
  }
  if (auto up = find_up_decomposition(fp, r)) {
    j["up"] = {{"found", true},
               {"rotation", up->rotation},
               {"split", up->split},
               {"u", letters_json(fp, up->u)},
               {"v", letters_json(fp, up->v)}};
  } else {
    j["up"] = {{"found", false}};
  }
  std::vector<std::string> violations;
  try {
    Classification c = classify(fp, r);
    j["classification"] = classification_json(fp, c);
    for (const std::string& p : verify_classification(fp, r, c))
      violations.push_back(p);
  } catch (const TheoremViolation& e) {
    j["classification"] = nullptr;
    violations.push_back(e.what());
  }
  j["exceptional"] = is_exceptional(fp, r);
  if (tl.d2 <= 2) {
    j["c6"] = c6_json(fp, c6_status(fp, r, m));
  } else {
    j["c6"] = nullptr;
  }
  j["violations"] = violations;
  return j;
}

inline ordered_json filters_json(const EnumFilters& f) {
  ordered_json j;
  j["not_proper_power"] = f.not_proper_power;
  j["d2_max"] = f.d2_max ? ordered_json(*f.d2_max) : ordered_json(nullptr);
  j["d2_exact"] = f.d2_exact ? ordered_json(*f.d2_exact) : ordered_json(nullptr);
  return j;
}

inline ordered_json length_stats_json(const LengthStats& st) {
  ordered_json j;
  j["length"] = st.length;
  j["raw_sequences"] = st.raw_sequences;
  j["raw_kept"] = st.raw_kept;
  j["classes"] = st.classes;
  j["sum_orbit"] = st.sum_orbit;
  return j;
}

inline ordered_json enumerate_json(const FreeProduct& fp,
                                   const EnumResult& en) {
  ordered_json j;
  ordered_json lengths = ordered_json::array();
  for (const LengthStats& st : en.stats) lengths.push_back(length_stats_json(st));
  j["lengths"] = std::move(lengths);
  ordered_json classes = ordered_json::array();
  for (const SymClassRep& cls : en.classes) {
    classes.push_back({{"word", letters_json(fp, cls.rep)},
                       {"length", cls.rep.length()},
                       {"orbit_size", cls.orbit_size}});
  }
  j["classes"] = std::move(classes);
  return j;
}

inline ordered_json sweep_json(const VerificationReport& rep) {
  ordered_json j;
  j["max_length"] = rep.spec.max_length;
  j["m"] = rep.spec.m;
  j["filters"] = filters_json(rep.spec.filters);
  j["classes_total"] = rep.classes_total;
  ordered_json lengths = ordered_json::array();
  for (const LengthStats& st : rep.stats) lengths.push_back(length_stats_json(st));
  j["lengths"] = std::move(lengths);
  ordered_json hist = ordered_json::object();
  for (const std::string& key : histogram_buckets())
    hist[key] = rep.histogram.count(key) ? rep.histogram.at(key) : 0;
  j["histogram"] = std::move(hist);
  j["up_tiling"] = {{"checked", rep.up_tiling_checked},
                    {"min_d_min", rep.up_tiling_min_d
                                      ? ordered_json(*rep.up_tiling_min_d)
                                      : ordered_json(nullptr)}};
  j["tiling_failures"] = rep.tiling_failures;
  j["violations"] = rep.violations;
  j["passed"] = rep.passed();
  return j;
}

inline ordered_json criterion_agreement_json(
    const CriterionAgreementReport& rep) {
  ordered_json j;
  j["max_length"] = rep.spec.max_length;
  j["classes_total"] = rep.classes_total;
  j["agreements"] = rep.agreements;
  j["criterion_only"] = rep.criterion_only;
  j["decomposition_only"] = rep.decomposition_only;
  j["passed"] = rep.passed();
  return j;
}

inline ordered_json involution_family_json(const FreeProduct& fp,
                                           const InvolutionFamilyReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["word"] = letters_json(fp, rep.word);
  j["d2"] = rep.d2;
  if (rep.up) {
    j["up"] = {{"found", true},
               {"rotation", rep.up->rotation},
               {"split", rep.up->split},
               {"u", letters_json(fp, rep.up->u)},
               {"v", letters_json(fp, rep.up->v)}};
  } else {
    j["up"] = {{"found", false}};
  }
  j["mirror_found"] = rep.mirror_found;
  j["classification"] = rep.classification;
  j["problems"] = rep.problems;
  j["passed"] = rep.passed();
  return j;
}

}  // namespace fpwords
