#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fpwords/enumerate.hpp"
#include "fpwords/errors.hpp"
#include "fpwords/groups.hpp"
#include "fpwords/words.hpp"

namespace fpwords {

inline constexpr const char* kToolName = "fpwords";
inline constexpr const char* kToolVersion = "1.0.0";

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace detail {

inline int require_int(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InputError(std::string("group spec needs integer field \"") + key +
                     "\"");
  return j.at(key).get<int>();
}

inline std::string string_or(const nlohmann::ordered_json& j, const char* key,
                             const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string())
    throw InputError(std::string("field \"") + key + "\" must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace detail

// Group spec formats:
//   {"kind":"cyclic","n":6,"base":"g"}
//   {"kind":"elementary-abelian-2","k":2,"base":"b"}
//   {"kind":"dihedral","n":3,"base":"r","refl":"f"}
//   {"kind":"table","mult":[[...]],"names":[...]}
// plus an optional "names" array overriding all element names. The default
// cyclic base depends on the factor position so that two unnamed cyclic
// factors never collide.
inline GroupTable parse_group(const nlohmann::ordered_json& j, int factor) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InputError("each group spec must be an object with a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  GroupTable g = [&]() {
    if (kind == "cyclic") {
      std::string base = detail::string_or(j, "base", factor == 1 ? "a" : "t");
      return GroupTable::cyclic(detail::require_int(j, "n"), base);
    }
    if (kind == "elementary-abelian-2") {
      return GroupTable::elementary_abelian_2(detail::require_int(j, "k"),
                                              detail::string_or(j, "base", "b"));
    }
    if (kind == "dihedral") {
      return GroupTable::dihedral(detail::require_int(j, "n"),
                                  detail::string_or(j, "base", "r"),
                                  detail::string_or(j, "refl", "f"));
    }
    if (kind == "table") {
      if (!j.contains("mult") || !j.at("mult").is_array())
        throw InputError("table spec needs a \"mult\" array of rows");
      std::vector<std::vector<int>> mult;
      for (const auto& row : j.at("mult"))
        mult.push_back(row.get<std::vector<int>>());
      std::vector<std::string> names;
      if (j.contains("names"))
        names = j.at("names").get<std::vector<std::string>>();
      return GroupTable::from_table(mult, std::move(names));
    }
    throw InputError("unknown group kind \"" + kind + "\"");
  }();
  if (j.contains("names") && kind != "table")
    g = g.with_names(j.at("names").get<std::vector<std::string>>());
  return g;
}

struct InputDocument {
  FreeProduct fp;
  std::vector<std::vector<RawLetter>> words;
  int m = 3;
  std::optional<int> max_length;
  EnumFilters filters;
};

// Letter-name resolution across the two factors. Non-identity names must be
// globally unique; identity names (usually "1" in both factors) resolve to
// the vanishing identity and may coincide.
class LetterResolver {
 public:
  explicit LetterResolver(const FreeProduct& fp) {
    for (int f = 1; f <= 2; ++f) {
      const GroupTable& g = fp.factor(f);
      for (int e = 0; e < g.size(); ++e) {
        const std::string& name = g.name(e);
        auto [it, inserted] = map_.emplace(name, RawLetter{f, e});
        if (!inserted) {
          if (it->second.elem == kIdentity && e == kIdentity) continue;
          throw InputError("letter name \"" + name +
                           "\" is ambiguous across the two factors");
        }
      }
    }
  }

  RawLetter resolve(const std::string& name) const {
    auto it = map_.find(name);
    if (it == map_.end())
      throw InputError("unknown letter name \"" + name + "\"");
    return it->second;
  }

 private:
  std::map<std::string, RawLetter> map_;
};

inline InputDocument parse_input(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("input document must be a JSON object");
  if (!j.contains("groups") || !j.at("groups").is_array() ||
      j.at("groups").size() != 2)
    throw InputError("input needs a \"groups\" array with exactly two specs");
  GroupTable g1 = parse_group(j.at("groups").at(0), 1);
  GroupTable g2 = parse_group(j.at("groups").at(1), 2);
  InputDocument doc{FreeProduct(std::move(g1), std::move(g2)), {}, 3, {}, {}};
  LetterResolver resolver(doc.fp);
  if (j.contains("words")) {
    if (!j.at("words").is_array())
      throw InputError("\"words\" must be an array of word literals");
    for (const auto& wj : j.at("words")) {
      if (!wj.is_array())
        throw InputError("each word literal must be an array of letter names");
      std::vector<RawLetter> raws;
      for (const auto& lj : wj) {
        if (!lj.is_string())
          throw InputError("letters in a word literal must be strings");
        raws.push_back(resolver.resolve(lj.get<std::string>()));
      }
      doc.words.push_back(std::move(raws));
    }
  }
  if (j.contains("m")) {
    if (!j.at("m").is_number_integer() || j.at("m").get<int>() < 1)
      throw InputError("\"m\" must be a positive integer");
    doc.m = j.at("m").get<int>();
  }
  if (j.contains("max_length")) {
    if (!j.at("max_length").is_number_integer())
      throw InputError("\"max_length\" must be an integer");
    doc.max_length = j.at("max_length").get<int>();
  }
  if (j.contains("filters")) {
    const auto& f = j.at("filters");
    if (!f.is_object()) throw InputError("\"filters\" must be an object");
    if (f.contains("not_proper_power"))
      doc.filters.not_proper_power = f.at("not_proper_power").get<bool>();
    if (f.contains("d2_max") && !f.at("d2_max").is_null())
      doc.filters.d2_max = f.at("d2_max").get<int>();
    if (f.contains("d2_exact") && !f.at("d2_exact").is_null())
      doc.filters.d2_exact = f.at("d2_exact").get<int>();
  }
  return doc;
}

// Reduce a resolved word literal to its cyclic core. Letters that merge or
// cancel are fine; what is rejected is a word whose core is shorter than
// the minimum analyzable length.
inline CyclicWord word_core(const FreeProduct& fp,
                            const std::vector<RawLetter>& raws) {
  FPWord reduced = reduce(fp, raws);
  CyclicReduction cr = cyclically_reduce(fp, std::move(reduced));
  if (cr.core.length() < 2)
    throw InputError(
        "word reduces to a unit or a single letter; analysis needs a "
        "cyclically reduced word of length >= 2");
  return to_cyclic(cr.core);
}

}  // namespace fpwords
