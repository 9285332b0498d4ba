/*
  Input parsing, run drivers and report rendering for the CLI.

  Input format (line oriented, '#' starts a comment):
      n k
      <n rows of k integers>        columns are vertices
      nef r : i1 i2 ... ; j1 ...    optional, 1-based column indices
*/

#pragma once

#include "hodge/nef.hpp"
#include "hodge/stringy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodge {

struct InputData {
  std::vector<IntVec> vertices;                 // columns of the matrix
  std::optional<std::vector<std::vector<int>>> parts;  // 0-based
};

InputData parse_input(const std::string& path);
InputData parse_input_text(const std::string& text, const std::string& name);

struct RunOptions {
  std::string mode = "auto";  // auto | generic | indecomposable
  bool json = false;
  bool cross_check = false;
  bool relations = false;
  bool ample = false;
  bool no_memo = false;
  bool timings = false;
  int threads = 1;
};

struct RunReport {
  int n = 0, r = 0;
  std::string mode_used;
  Int h11, h21;
  TermBreakdown h11_terms, h21_terms;
  std::optional<HodgeDiamond> diamond;
  bool cross_check_ran = false;
  bool relations_ran = false;
  std::optional<std::pair<TermBreakdown, TermBreakdown>> ample;
  std::vector<std::pair<std::string, double>> timings_ms;
};

RunReport run_hyper(const InputData& in, const RunOptions& opts);
RunReport run_ci(const InputData& in, const RunOptions& opts);

std::string render_text(const RunReport& rep);
std::string render_json(const RunReport& rep, bool with_timings);

}  // namespace hodge
