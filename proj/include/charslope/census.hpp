#pragma once

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "charslope/abelian.hpp"

namespace charslope::census {

struct LinkId {
  std::string link_name;
  Int linking_number = 0;
};

/// Claim that the record's manifold M satisfies M((1,0),*) = S1xD2,
/// M((1,0),ab) = S1xS2, and H1(M((0,1),ab)) = alt_h1 (which must be finite).
struct FreeObstruction {
  std::array<Int, 2> ab{0, 0};
  FgAbelianGroup alt_h1;
};

/// One cusped-census manifold. Geometry claims (which fillings are solid
/// tori, homology of named fillings) are trusted fixture data; the filling
/// coordinates (a,b) are opaque labels in the census homology basis, not
/// meridian-longitude pairs.
struct CensusRecord {
  std::string name;
  std::string volume;  // exact decimal string as shipped
  double volume_value = 0.0;
  FgAbelianGroup h1;
  std::optional<LinkId> link;
  std::vector<std::vector<std::array<Int, 2>>> solid_torus_fillings;  // per cusp
  std::optional<FreeObstruction> free_obstruction;
};

struct Verdict {
  enum class Kind {
    survivor,
    eliminated_torsion,
    eliminated_linking,
    eliminated_berge_gabai,
    eliminated_free_lemma,
  };
  Kind kind = Kind::survivor;
  Int winding = 0;           // eliminated_linking: the nonzero |linking number|
  std::array<Int, 2> ab{0, 0};  // eliminated_free_lemma: the filling used
};

inline const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::survivor: return "survivor";
    case Verdict::Kind::eliminated_torsion: return "eliminated_torsion";
    case Verdict::Kind::eliminated_linking: return "eliminated_linking";
    case Verdict::Kind::eliminated_berge_gabai: return "eliminated_berge_gabai";
    case Verdict::Kind::eliminated_free_lemma: return "eliminated_free_lemma";
  }
  return "";
}

namespace detail_census {

inline FgAbelianGroup group_from_json(const nlohmann::json& j) {
  std::vector<Int> torsion;
  for (const auto& t : j.at("torsion")) torsion.push_back(t.get<Int>());
  return make_group(j.at("rank").get<int>(), std::move(torsion));
}

inline nlohmann::json group_to_json(const FgAbelianGroup& g) {
  return {{"rank", g.rank}, {"torsion", g.torsion}};
}

}  // namespace detail_census

/// Parses the JSON-lines census fixture. Records come back in file order;
/// volumes are kept as the exact strings shipped.
inline std::vector<CensusRecord> parse_census(std::istream& in) {
  std::vector<CensusRecord> records;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto bad = [&](const std::string& why) {
      fail(Errc::malformed_record, "census line " + std::to_string(line_no) + ": " + why);
    };
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) bad("not valid JSON");
    CensusRecord rec;
    try {
      rec.name = j.at("name").get<std::string>();
      rec.volume = j.at("volume").get<std::string>();
      rec.h1 = detail_census::group_from_json(j.at("h1"));
      if (!j.at("link").is_null()) {
        rec.link = LinkId{j["link"].at("link_name").get<std::string>(),
                          j["link"].at("linking_number").get<Int>()};
      }
      for (const auto& cusp : j.at("solid_torus_fillings")) {
        std::vector<std::array<Int, 2>> fillings;
        for (const auto& f : cusp) fillings.push_back({f.at(0).get<Int>(), f.at(1).get<Int>()});
        rec.solid_torus_fillings.push_back(std::move(fillings));
      }
      if (!j.at("free_obstruction").is_null()) {
        const auto& fo = j["free_obstruction"];
        rec.free_obstruction =
            FreeObstruction{{fo.at("ab").at(0).get<Int>(), fo.at("ab").at(1).get<Int>()},
                            detail_census::group_from_json(fo.at("alt_h1"))};
      }
    } catch (const nlohmann::json::exception& e) {
      bad(e.what());
    }
    if (rec.name.empty()) bad("empty name");
    try {
      rec.volume_value = std::stod(rec.volume);
    } catch (const std::exception&) {
      bad("volume is not a decimal");
    }
    if (!(rec.volume_value > 0.0)) bad("volume must be positive");
    if (!seen.insert(rec.name).second)
      fail(Errc::duplicate_name, "duplicate census record '" + rec.name + "'");
    records.push_back(std::move(rec));
  }
  return records;
}

/// Applies the elimination rules in fixed precedence, first match wins:
///   1. torsion in H1 (not a 2-component link complement);
///   2. identified as a link with nonzero linking number;
///   3. two distinct solid-torus fillings on one cusp (core would be a
///      Berge-Gabai knot, which has nonzero winding);
///   4. a single solid-torus filling whose companion S1xS2 slope refills to
///      something with finite H1 (impossible at linking number zero).
inline Verdict eliminate(const CensusRecord& rec) {
  if (!rec.h1.torsion.empty()) return {Verdict::Kind::eliminated_torsion, 0, {0, 0}};
  if (rec.link && rec.link->linking_number != 0)
    return {Verdict::Kind::eliminated_linking, detail::checked_abs(rec.link->linking_number), {0, 0}};
  for (const auto& cusp : rec.solid_torus_fillings) {
    std::set<std::array<Int, 2>> distinct(cusp.begin(), cusp.end());
    if (distinct.size() >= 2) return {Verdict::Kind::eliminated_berge_gabai, 0, {0, 0}};
  }
  if (rec.free_obstruction) {
    if (!is_finite(rec.free_obstruction->alt_h1))
      fail(Errc::inconsistent_record,
           rec.name + ": free_obstruction claims a finite filling homology but alt_h1 is infinite");
    return {Verdict::Kind::eliminated_free_lemma, 0, rec.free_obstruction->ab};
  }
  return {Verdict::Kind::survivor, 0, {0, 0}};
}

struct PipelineReport {
  struct Entry {
    bool judged = false;  // false: volume at or above the cap, left unjudged
    Verdict verdict;
  };
  std::map<std::string, Entry> entries;  // name order
  std::vector<std::string> survivors;    // sorted by volume, then name
};

inline PipelineReport run_pipeline(const std::vector<CensusRecord>& records, double v_cap) {
  PipelineReport report;
  std::vector<std::pair<double, std::string>> surviving;
  for (const auto& rec : records) {
    PipelineReport::Entry entry;
    entry.judged = rec.volume_value < v_cap;
    if (entry.judged) {
      entry.verdict = eliminate(rec);
      if (entry.verdict.kind == Verdict::Kind::survivor)
        surviving.emplace_back(rec.volume_value, rec.name);
    }
    report.entries.emplace(rec.name, std::move(entry));
  }
  std::sort(surviving.begin(), surviving.end());
  for (auto& [vol, name] : surviving) report.survivors.push_back(std::move(name));
  return report;
}

inline nlohmann::json report_to_json(const std::vector<CensusRecord>& records,
                                     const PipelineReport& report) {
  nlohmann::json out;
  out["records"] = nlohmann::json::array();
  for (const auto& rec : records) {
    const auto& entry = report.entries.at(rec.name);
    nlohmann::json r{{"name", rec.name}, {"volume", rec.volume}};
    if (!entry.judged) {
      r["verdict"] = "out_of_range";
    } else {
      r["verdict"] = to_string(entry.verdict.kind);
      if (entry.verdict.kind == Verdict::Kind::eliminated_linking)
        r["winding"] = entry.verdict.winding;
      if (entry.verdict.kind == Verdict::Kind::eliminated_free_lemma)
        r["ab"] = entry.verdict.ab;
    }
    out["records"].push_back(std::move(r));
  }
  out["survivors"] = report.survivors;
  return out;
}

}  // namespace charslope::census
