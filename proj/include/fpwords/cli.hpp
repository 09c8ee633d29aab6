#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fpwords/cancellation.hpp"
#include "fpwords/classify.hpp"
#include "fpwords/enumerate.hpp"
#include "fpwords/errors.hpp"
#include "fpwords/input.hpp"
#include "fpwords/json_report.hpp"
#include "fpwords/words.hpp"

namespace fpwords {
namespace cli_detail {

inline std::string join_names(const ordered_json& arr) {
  std::string out;
  for (const auto& el : arr) {
    if (!out.empty()) out += ' ';
    out += el.get<std::string>();
  }
  return out;
}

inline std::string bracket_names(const ordered_json& arr) {
  return "[" + join_names(arr) + "]";
}

inline void print_analyze(std::ostream& out, const ordered_json& rep) {
  out << "word " << join_names(rep.at("word")) << "  (length "
      << rep.at("length").get<int>() << ")\n";
  out << "  d2 = " << rep.at("d2").get<int>();
  if (!rep.at("counts").empty()) {
    out << "  counts:";
    for (const auto& el : rep.at("counts").items())
      out << " " << el.key() << "=" << el.value().get<int>();
  }
  out << "\n";
  if (!rep.at("marker").is_null()) {
    const auto& md = rep.at("marker");
    out << "  marker " << md.at("letter").get<std::string>() << " at rotation "
        << md.at("rotation").get<int>() << ": segments";
    for (const auto& seg : md.at("segments")) out << " " << bracket_names(seg);
    out << "\n";
  }
  const auto& up = rep.at("up");
  if (up.at("found").get<bool>()) {
    out << "  unique-position split: rotation " << up.at("rotation").get<int>()
        << ", U = " << join_names(up.at("u"))
        << ", V = " << join_names(up.at("v")) << "\n";
  } else {
    out << "  unique-position split: none\n";
  }
  if (rep.at("classification").is_null()) {
    out << "  classification: FAILED\n";
  } else {
    const auto& c = rep.at("classification");
    std::string tag = c.at("tag").get<std::string>();
    out << "  classification: " << tag;
    if (tag == "aM") {
      out << "  a=" << c.at("a").get<std::string>() << "  M="
          << bracket_names(c.at("m"));
    } else if (tag == "aXbX") {
      out << "  a=" << c.at("a").get<std::string>() << "  X="
          << bracket_names(c.at("x")) << "  b=" << c.at("b").get<std::string>()
          << (c.at("b_order2").get<bool>() ? "  b^2=1" : "  b^2!=1");
    } else if (tag == "out-of-scope") {
      out << "  (d2 = " << c.at("d2").get<int>() << ")";
    }
    out << "\n";
  }
  out << "  exceptional: " << (rep.at("exceptional").get<bool>() ? "yes" : "no")
      << "\n";
  if (!rep.at("c6").is_null()) {
    const auto& c6 = rep.at("c6");
    out << "  c6: " << (c6.at("certified").get<bool>() ? "certified" : "not certified")
        << ", route " << c6.at("route").get<std::string>() << ", d_min "
        << c6.at("d_min").get<int>() << "\n";
  }
  for (const auto& v : rep.at("violations"))
    out << "  VIOLATION: " << v.get<std::string>() << "\n";
}

inline CyclicWord prepare_word(const InputDocument& doc,
                               const std::vector<RawLetter>& raws,
                               bool reject_powers) {
  CyclicWord core = word_core(doc.fp, raws);
  if (reject_powers) {
    PowerCheck pc = is_proper_power(core);
    if (pc.proper)
      throw InputError("word is a proper power: root " +
                       render(doc.fp, pc.root) + ", exponent " +
                       std::to_string(pc.exponent));
  }
  return core;
}

inline const std::vector<std::vector<RawLetter>>& require_words(
    const InputDocument& doc) {
  if (doc.words.empty())
    throw InputError("this command needs a \"words\" array in the input");
  return doc.words;
}

inline int require_max_length(const InputDocument& doc) {
  if (!doc.max_length)
    throw InputError(
        "this command needs \"max_length\" in the input (or --max-length)");
  return *doc.max_length;
}

inline int cmd_analyze(const InputDocument& doc, ordered_json& envelope,
                       std::ostream& out, bool quiet) {
  int status = 0;
  ordered_json reports = ordered_json::array();
  for (const auto& raws : require_words(doc)) {
    CyclicWord core = prepare_word(doc, raws, true);
    ordered_json rep = analyze_json(doc.fp, core, doc.m);
    if (!rep.at("violations").empty()) status = 1;
    if (!quiet) print_analyze(out, rep);
    reports.push_back(std::move(rep));
  }
  envelope["reports"] = std::move(reports);
  return status;
}

inline int cmd_classify(const InputDocument& doc, ordered_json& envelope,
                        std::ostream& out, bool quiet) {
  int status = 0;
  ordered_json reports = ordered_json::array();
  for (const auto& raws : require_words(doc)) {
    CyclicWord core = prepare_word(doc, raws, true);
    ordered_json rep;
    rep["word"] = letters_json(doc.fp, core);
    std::vector<std::string> violations;
    try {
      Classification c = classify(doc.fp, core);
      rep["classification"] = classification_json(doc.fp, c);
      violations = verify_classification(doc.fp, core, c);
    } catch (const TheoremViolation& e) {
      rep["classification"] = nullptr;
      violations.push_back(e.what());
    }
    rep["exceptional"] = is_exceptional(doc.fp, core);
    rep["violations"] = violations;
    if (!violations.empty()) status = 1;
    if (!quiet) {
      out << "word " << render(doc.fp, core) << ": ";
      if (rep.at("classification").is_null())
        out << "FAILED";
      else
        out << rep.at("classification").at("tag").get<std::string>();
      if (rep.at("exceptional").get<bool>()) out << " (exceptional)";
      out << "\n";
    }
    reports.push_back(std::move(rep));
  }
  envelope["reports"] = std::move(reports);
  return status;
}

inline int cmd_pieces(const InputDocument& doc, ordered_json& envelope,
                      std::ostream& out, bool quiet) {
  ordered_json reports = ordered_json::array();
  for (const auto& raws : require_words(doc)) {
    CyclicWord core = prepare_word(doc, raws, false);
    PieceTable pt = build_piece_table(doc.fp, core, doc.m);
    ordered_json rep;
    rep["word"] = letters_json(doc.fp, core);
    rep.update(pieces_json(pt));
    if (!quiet) {
      out << "word " << render(doc.fp, core) << "  (m = " << doc.m << ")\n";
      out << "  max piece length by start residue, in the word:   ";
      for (int v : pt.max_len_pos) out << v << " ";
      out << "\n  max piece length by start residue, in the inverse: ";
      for (int v : pt.max_len_neg) out << v << " ";
      out << "\n";
    }
    reports.push_back(std::move(rep));
  }
  envelope["reports"] = std::move(reports);
  return 0;
}

inline int cmd_tile(const InputDocument& doc, ordered_json& envelope,
                    std::ostream& out, bool quiet) {
  ordered_json reports = ordered_json::array();
  for (const auto& raws : require_words(doc)) {
    CyclicWord core = prepare_word(doc, raws, false);
    PieceTable pt = build_piece_table(doc.fp, core, doc.m);
    TilingResult t = min_zone_tiling(pt);
    if (!validate_tiling(pt, t))
      throw TheoremViolation("tiling witness failed validation");
    ordered_json rep;
    rep["word"] = letters_json(doc.fp, core);
    rep.update(tiling_json(doc.fp, t));
    if (!quiet) {
      out << "word " << render(doc.fp, core) << "  (m = " << doc.m
          << "): d_min = " << t.d_min << ", anchor " << t.anchor << "\n";
      for (const TilingSegment& s : t.segments)
        out << "  piece [" << render(doc.fp, s.piece) << "] junction "
            << doc.fp.name(s.junction) << "\n";
    }
    reports.push_back(std::move(rep));
  }
  envelope["reports"] = std::move(reports);
  return 0;
}

inline int cmd_enumerate(const InputDocument& doc, ordered_json& envelope,
                         std::ostream& out, bool quiet) {
  EnumSpec spec{require_max_length(doc), doc.m, doc.filters};
  EnumResult en = enumerate_classes(doc.fp, spec);
  envelope["report"] = enumerate_json(doc.fp, en);
  if (!quiet) {
    for (const LengthStats& st : en.stats)
      out << "length " << st.length << ": " << st.classes << " classes from "
          << st.raw_kept << " kept of " << st.raw_sequences
          << " raw sequences\n";
    for (const SymClassRep& cls : en.classes)
      out << "  " << render(doc.fp, cls.rep) << "  (orbit "
          << cls.orbit_size << ")\n";
  }
  return 0;
}

inline int cmd_verify(const InputDocument& doc, ordered_json& envelope,
                      std::ostream& out, bool quiet) {
  EnumSpec spec{require_max_length(doc), doc.m, doc.filters};
  VerificationReport sweep = classification_sweep(doc.fp, spec);
  CriterionAgreementReport agree = criterion_agreement(doc.fp, spec);
  ordered_json report;
  report["classification_sweep"] = sweep_json(sweep);
  report["criterion_agreement"] = criterion_agreement_json(agree);
  envelope["report"] = std::move(report);
  if (!quiet) {
    out << "classification sweep: " << sweep.classes_total << " classes";
    out << ", histogram";
    for (const std::string& key : histogram_buckets())
      out << " " << key << "=" << sweep.histogram.at(key);
    out << "\n";
    out << "  unique-position tiling: " << sweep.up_tiling_checked
        << " checked";
    if (sweep.up_tiling_min_d) out << ", min d_min " << *sweep.up_tiling_min_d;
    out << "; " << sweep.tiling_failures.size() << " failures\n";
    out << "  violations: " << sweep.violations.size() << "\n";
    for (const std::string& v : sweep.violations) out << "    " << v << "\n";
    for (const std::string& v : sweep.tiling_failures) out << "    " << v << "\n";
    out << "criterion agreement (d2 = 1): " << agree.classes_total
        << " classes, " << agree.agreements << " agree, "
        << agree.criterion_only.size() << " criterion-only, "
        << agree.decomposition_only.size() << " decomposition-only\n";
    for (const std::string& v : agree.criterion_only)
      out << "    criterion-only: " << v << "\n";
    for (const std::string& v : agree.decomposition_only)
      out << "    decomposition-only: " << v << "\n";
  }
  return (sweep.passed() && agree.passed()) ? 0 : 1;
}

}  // namespace cli_detail

// Front end shared by the binary and the tests. Returns the process exit
// status: 0 clean, 1 when a verification found violations, 2 on bad input.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"word analysis in free products of two finite groups"};
  app.name(kToolName);
  std::string command, input_path, json_path;
  int m_override = 0;
  int maxlen_override = 0;
  bool quiet = false;
  app.add_option("command", command,
                 "analyze | classify | pieces | tile | enumerate | verify")
      ->required()
      ->check(CLI::IsMember(
          {"analyze", "classify", "pieces", "tile", "enumerate", "verify"}));
  app.add_option("input", input_path, "path to the JSON input document")
      ->required();
  app.add_option("--json", json_path, "write the JSON report to this path");
  app.add_option("--m", m_override, "override the exponent m");
  app.add_option("--max-length", maxlen_override,
                 "override max_length for enumerate/verify");
  app.add_flag("--quiet", quiet, "suppress the human-readable report");

  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    InputDocument doc = parse_input(text);
    if (m_override > 0) doc.m = m_override;
    if (maxlen_override > 0) doc.max_length = maxlen_override;

    ordered_json envelope;
    envelope["tool"] = kToolName;
    envelope["version"] = kToolVersion;
    envelope["input_hash"] = fnv1a64_hex(text);
    envelope["command"] = command;
    envelope["m"] = doc.m;

    int status = 0;
    if (command == "analyze")
      status = cli_detail::cmd_analyze(doc, envelope, out, quiet);
    else if (command == "classify")
      status = cli_detail::cmd_classify(doc, envelope, out, quiet);
    else if (command == "pieces")
      status = cli_detail::cmd_pieces(doc, envelope, out, quiet);
    else if (command == "tile")
      status = cli_detail::cmd_tile(doc, envelope, out, quiet);
    else if (command == "enumerate")
      status = cli_detail::cmd_enumerate(doc, envelope, out, quiet);
    else
      status = cli_detail::cmd_verify(doc, envelope, out, quiet);

    if (!json_path.empty()) {
      std::ofstream jf(json_path, std::ios::binary);
      if (!jf) throw InputError("cannot open output file: " + json_path);
      jf << envelope.dump(2) << "\n";
    }
    return status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fpwords
