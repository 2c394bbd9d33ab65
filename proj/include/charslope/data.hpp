#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charslope/census.hpp"
#include "charslope/characterise.hpp"

#ifndef CHARSLOPE_DEFAULT_DATA_DIR
#define CHARSLOPE_DEFAULT_DATA_DIR ""
#endif

namespace charslope::data {

/// Fixture directory resolution: explicit path, then the CHARSLOPE_DATA
/// environment variable, then the compiled-in default.
inline std::filesystem::path resolve_data_dir(const std::optional<std::string>& explicit_dir = {}) {
  if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
  if (const char* env = std::getenv("CHARSLOPE_DATA"); env && *env) return env;
  const std::string fallback = CHARSLOPE_DEFAULT_DATA_DIR;
  if (!fallback.empty()) return fallback;
  fail(Errc::bad_data, "no data directory: pass --data-dir or set CHARSLOPE_DATA");
}

inline nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_data, "cannot open " + path.string());
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Errc::bad_data, "invalid JSON in " + path.string());
  return j;
}

/// One shipped systole-table row; `q` is the printed bound column, kept for
/// table-reproduction checks.
struct SystoleRow {
  Int key = 0;
  std::string systole;
  double systole_value = 0.0;
  int q = 0;
};

inline std::vector<SystoleRow> load_systole_rows(const std::filesystem::path& path,
                                                 const char* key_field) {
  const nlohmann::json j = load_json_file(path);
  std::vector<SystoleRow> rows;
  try {
    for (const auto& r : j.at("rows")) {
      SystoleRow row;
      row.key = r.at(key_field).get<Int>();
      row.systole = r.at("systole").get<std::string>();
      row.systole_value = std::stod(row.systole);
      row.q = r.at("q").get<int>();
      rows.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    fail(Errc::bad_data, path.string() + ": " + e.what());
  }
  return rows;
}

inline std::vector<SystoleRow> load_twist_table(const std::filesystem::path& dir) {
  return load_systole_rows(dir / "twist_lengths.json", "t");
}

inline std::vector<SystoleRow> load_double_table(const std::filesystem::path& dir) {
  return load_systole_rows(dir / "double_lengths.json", "n");
}

struct StageData {
  BaseVolume base;
  std::vector<StageInput> inputs;
};

inline StageData load_stage_inputs(const std::filesystem::path& dir) {
  const nlohmann::json j = load_json_file(dir / "stages.json");
  StageData data;
  try {
    data.base = make_base_volume(std::stod(j.at("base_volume").get<std::string>()));
    for (const auto& s : j.at("stages"))
      data.inputs.push_back({s.at("boundary").get<std::string>(), s.at("a_k").get<Int>()});
  } catch (const std::exception& e) {
    fail(Errc::bad_data, (dir / "stages.json").string() + ": " + e.what());
  }
  return data;
}

inline std::vector<census::CensusRecord> load_census(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_data, "cannot open " + path.string());
  return census::parse_census(in);
}

inline std::vector<census::CensusRecord> load_census_fixture(const std::filesystem::path& dir) {
  return load_census(dir / "census.jsonl");
}

inline Fixtures load_fixtures(const std::filesystem::path& dir) {
  Fixtures fx;
  for (const auto& row : load_twist_table(dir)) fx.twist_systoles[row.key] = row.systole_value;
  for (const auto& row : load_double_table(dir)) fx.whitehead_systoles[row.key] = row.systole_value;
  const StageData stages = load_stage_inputs(dir);
  fx.stages = stage_table(stages.inputs, stages.base);
  return fx;
}

}  // namespace charslope::data
