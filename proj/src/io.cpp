#include "hodge/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace hodge {

/* ------------------------------------------------------------------ */
/* parsing                                                             */
/* ------------------------------------------------------------------ */

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

InputData parse_input_text(const std::string& text, const std::string& name) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<int, std::string>> data;  // (line number, content)
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    std::string s = strip_comment(line);
    if (!blank(s)) data.emplace_back(ln, s);
  }
  if (data.empty()) throw ParseError(name + ": empty input");

  auto fail = [&](int l, const std::string& msg) -> ParseError {
    return ParseError(name + ":" + std::to_string(l) + ": " + msg);
  };

  std::size_t n = 0, k = 0;
  {
    std::istringstream hs(data[0].second);
    long long a = 0, b = 0;
    if (!(hs >> a >> b) || a <= 0 || b <= 0)
      throw fail(data[0].first, "expected header 'n k' with positive integers");
    std::string rest;
    if (hs >> rest) throw fail(data[0].first, "trailing tokens after header");
    n = static_cast<std::size_t>(a);
    k = static_cast<std::size_t>(b);
  }
  if (data.size() < n + 1)
    throw fail(data.back().first, "expected " + std::to_string(n) + " matrix rows");

  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 1; i <= n; ++i) {
    std::istringstream rs(data[i].second);
    std::vector<Int> row;
    std::string tok;
    while (rs >> tok) {
      try {
        row.emplace_back(tok);
      } catch (...) {
        throw fail(data[i].first, "bad integer '" + tok + "'");
      }
    }
    if (row.size() != k)
      throw fail(data[i].first, "row has " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(k));
    rows.push_back(std::move(row));
  }

  InputData in;
  for (std::size_t j = 0; j < k; ++j) {
    IntVec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = rows[i][j];
    in.vertices.push_back(std::move(col));
  }

  if (data.size() > n + 1) {
    const auto& [l, s] = data[n + 1];
    std::istringstream ns(s);
    std::string kw;
    ns >> kw;
    if (kw != "nef") throw fail(l, "expected 'nef' line, got '" + kw + "'");
    long long r = 0;
    char colon = 0;
    if (!(ns >> r) || r <= 0) throw fail(l, "expected part count after 'nef'");
    if (!(ns >> colon) || colon != ':') throw fail(l, "expected ':' after part count");
    std::vector<std::vector<int>> parts(1);
    std::string tok;
    while (ns >> tok) {
      if (tok == ";") {
        parts.emplace_back();
        continue;
      }
      // allow "3;" without spaces
      bool ends_semi = !tok.empty() && tok.back() == ';';
      if (ends_semi) tok.pop_back();
      if (!tok.empty()) {
        long long idx = 0;
        try {
          idx = std::stoll(tok);
        } catch (...) {
          throw fail(l, "bad index '" + tok + "'");
        }
        if (idx < 1 || idx > static_cast<long long>(k))
          throw IndexOutOfRange(name + ":" + std::to_string(l) +
                                ": vertex index " + std::to_string(idx) +
                                " out of range 1.." + std::to_string(k));
        parts.back().push_back(static_cast<int>(idx - 1));
      }
      if (ends_semi) parts.emplace_back();
    }
    while (!parts.empty() && parts.back().empty()) parts.pop_back();
    if (static_cast<long long>(parts.size()) != r)
      throw fail(l, "declared " + std::to_string(r) + " parts but found " +
                        std::to_string(parts.size()));
    in.parts = std::move(parts);
    if (data.size() > n + 2)
      throw fail(data[n + 2].first, "unexpected extra line");
  }
  return in;
}

InputData parse_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_input_text(ss.str(), path);
}

/* ------------------------------------------------------------------ */
/* drivers                                                             */
/* ------------------------------------------------------------------ */

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(RunReport& rep, std::string name)
      : rep_(rep), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    auto dt = std::chrono::steady_clock::now() - start_;
    rep_.timings_ms.emplace_back(
        name_, std::chrono::duration<double, std::milli>(dt).count());
  }

 private:
  RunReport& rep_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

RunReport run_hyper(const InputData& in, const RunOptions& opts) {
  RunReport rep;
  Polytope delta = Polytope::hull(in.vertices);
  if (delta.ambient_dim() != 4)
    throw WrongDimension("hyper: expected a 4-dimensional polytope");
  rep.n = 4;
  rep.r = 1;
  rep.mode_used = "hypersurface";
  {
    Stopwatch sw(rep, "closed_forms");
    rep.h11_terms = h11_hypersurface(delta);
    rep.h21_terms = h11_hypersurface(polar(delta));
    rep.h11 = rep.h11_terms.total();
    rep.h21 = rep.h21_terms.total();
  }
  if (opts.cross_check) {
    Stopwatch sw(rep, "cross_check");
    // full r = 1 Cayley construction must reproduce the direct pair
    std::vector<std::vector<int>> all(1);
    for (std::size_t i = 0; i < delta.vertices().size(); ++i)
      all[0].push_back(static_cast<int>(i));
    NefPartition np = validate_nef_partition(delta, all);
    CayleyPair cp = cayley(np);
    if (cp.p_star() != delta || cp.p() != polar(delta))
      throw ConsistencyError("hyper: r = 1 Cayley pair disagrees with (Delta, Delta^polar)");
    EPolyOptions eo;
    eo.threads = opts.threads;
    eo.no_flag_memo = opts.no_memo;
    rep.diamond = cross_check(cp, rep.h11, rep.h21, eo).diamond;
    rep.cross_check_ran = true;
  }
  return rep;
}

RunReport run_ci(const InputData& in, const RunOptions& opts) {
  RunReport rep;
  if (!in.parts)
    throw ValidationError("ci: input file has no nef partition line");
  Polytope delta = Polytope::hull(in.vertices);
  // partition indices refer to input columns; the hull stores vertices in
  // canonical order, so remap
  std::vector<std::vector<int>> parts;
  for (const auto& part : *in.parts) {
    std::vector<int> mapped;
    for (int col : part) {
      const IntVec& v = in.vertices[static_cast<std::size_t>(col)];
      auto it = std::find(delta.vertices().begin(), delta.vertices().end(), v);
      if (it == delta.vertices().end())
        throw InvalidPartition("ci: column " + std::to_string(col + 1) +
                               " is not a vertex of the polytope");
      mapped.push_back(static_cast<int>(it - delta.vertices().begin()));
    }
    parts.push_back(std::move(mapped));
  }
  NefPartition np = validate_nef_partition(delta, parts);
  rep.n = np.n();
  rep.r = np.r();

  CayleyPair cp;
  {
    Stopwatch sw(rep, "cayley");
    cp = cayley(np);
  }

  bool indec = false;
  {
    Stopwatch sw(rep, "decomposability");
    indec = is_indecomposable(np);
  }
  CiMode mode;
  if (opts.mode == "auto") {
    mode = indec ? CiMode::Indecomposable : CiMode::Generic;
  } else if (opts.mode == "generic") {
    mode = CiMode::Generic;
  } else if (opts.mode == "indecomposable") {
    if (!indec) throw Decomposable("ci: partition is decomposable");
    mode = CiMode::Indecomposable;
  } else {
    throw ParseError("ci: unknown mode '" + opts.mode + "'");
  }
  rep.mode_used = mode == CiMode::Indecomposable ? "indecomposable" : "generic";

  {
    Stopwatch sw(rep, "closed_forms");
    rep.h11_terms = mode == CiMode::Indecomposable
                        ? h11_ci_indecomposable(cp)
                        : h11_ci_generic(cp);
    rep.h21_terms = h21_ci(cp, mode);
    rep.h11 = rep.h11_terms.total();
    rep.h21 = rep.h21_terms.total();
  }
  if (opts.relations) {
    Stopwatch sw(rep, "relations");
    consistency_relations(cp, &np);  // throws on violation
    rep.relations_ran = true;
  }
  if (opts.ample) {
    Stopwatch sw(rep, "ample");
    rep.ample = ample_case_hodge(np);
  }
  if (opts.cross_check) {
    Stopwatch sw(rep, "cross_check");
    EPolyOptions eo;
    eo.threads = opts.threads;
    eo.no_flag_memo = opts.no_memo;
    rep.diamond = cross_check(cp, rep.h11, rep.h21, eo).diamond;
    rep.cross_check_ran = true;
  }
  return rep;
}

/* ------------------------------------------------------------------ */
/* rendering                                                           */
/* ------------------------------------------------------------------ */

std::string render_text(const RunReport& rep) {
  std::ostringstream os;
  os << "n = " << rep.n << ", r = " << rep.r << ", mode = " << rep.mode_used
     << "\n";
  os << "h11 = " << rep.h11_terms.render() << "\n";
  os << "h21 = " << rep.h21_terms.render() << "\n";
  if (rep.cross_check_ran) os << "cross-check: ok\n";
  if (rep.relations_ran) os << "relations: ok\n";
  if (rep.ample) {
    os << "ample h11 = " << rep.ample->first.render() << "\n";
    os << "ample h21 = " << rep.ample->second.render() << "\n";
  }
  return os.str();
}

std::string render_json(const RunReport& rep, bool with_timings) {
  using json = nlohmann::ordered_json;
  json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["h11"] = rep.h11.convert_to<long long>();
  j["h21"] = rep.h21.convert_to<long long>();
  json diamond = json::array();
  json ecoeffs = json::array();
  if (rep.diamond) {
    for (const auto& row : rep.diamond->h) {
      json jr = json::array();
      for (const auto& v : row) jr.push_back(v.convert_to<long long>());
      diamond.push_back(std::move(jr));
    }
    for (const auto& [k, c] : rep.diamond->e.m)
      ecoeffs.push_back({k.first, k.second, c.convert_to<long long>()});
  }
  j["diamond"] = std::move(diamond);
  j["e_coeffs"] = std::move(ecoeffs);
  auto terms_json = [](const TermBreakdown& tb) {
    json a = json::array();
    for (const auto& t : tb.terms)
      a.push_back({{"name", t.name}, {"value", t.value.convert_to<long long>()}});
    return a;
  };
  j["h11_terms"] = terms_json(rep.h11_terms);
  j["h21_terms"] = terms_json(rep.h21_terms);
  j["checks"] = {{"cross_check", rep.cross_check_ran},
                 {"relations", rep.relations_ran}};
  if (rep.ample) {
    j["ample"] = {{"h11_terms", terms_json(rep.ample->first)},
                  {"h11", rep.ample->first.total().convert_to<long long>()},
                  {"h21_terms", terms_json(rep.ample->second)},
                  {"h21", rep.ample->second.total().convert_to<long long>()}};
  }
  if (with_timings) {
    json t;
    for (const auto& [name, ms] : rep.timings_ms) t[name] = ms;
    j["timings"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

}  // namespace hodge
