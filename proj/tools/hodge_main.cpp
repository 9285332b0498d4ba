/*
  hodge: stringy Hodge numbers of toric Calabi-Yau hypersurfaces and
  bipartite complete-intersection threefolds, by closed-form lattice
  point formulas with an optional generating-function cross-check.
*/

#include "hodge/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

namespace {

int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stringy Hodge numbers of toric Calabi-Yau complete intersections"};
  app.require_subcommand(1);

  std::string file;
  hodge::RunOptions opts;
  opts.threads = default_threads();

  CLI::App* hyper = app.add_subcommand(
      "hyper", "anticanonical hypersurface of a 4-dim reflexive polytope");
  hyper->add_option("file", file, "input .poly file")->required();
  hyper->add_flag("--json", opts.json, "emit JSON instead of text");
  hyper->add_flag("--cross-check", opts.cross_check,
                  "also evaluate the generating function and compare");
  hyper->add_option("--threads", opts.threads, "worker threads");
  hyper->add_flag("--oracle-no-memo", opts.no_memo,
                  "bypass the flag-vector memo key (verification mode)");
  hyper->add_flag("--timings", opts.timings, "include timings in the output");

  CLI::App* ci = app.add_subcommand(
      "ci", "bipartite complete intersection of a 5-dim reflexive polytope");
  ci->add_option("file", file, "input .poly file")->required();
  ci->add_option("--mode", opts.mode, "auto | generic | indecomposable")
      ->check(CLI::IsMember({"auto", "generic", "indecomposable"}));
  ci->add_flag("--json", opts.json, "emit JSON instead of text");
  ci->add_flag("--cross-check", opts.cross_check,
               "also evaluate the generating function and compare");
  ci->add_flag("--relations", opts.relations,
               "verify the indecomposable-case vanishing relations");
  ci->add_flag("--ample", opts.ample, "also evaluate the ample-case formulas");
  ci->add_option("--threads", opts.threads, "worker threads");
  ci->add_flag("--oracle-no-memo", opts.no_memo,
               "bypass the flag-vector memo key (verification mode)");
  ci->add_flag("--timings", opts.timings, "include timings in the output");

  CLI11_PARSE(app, argc, argv);

  try {
    hodge::InputData in = hodge::parse_input(file);
    hodge::RunReport rep = hyper->parsed() ? hodge::run_hyper(in, opts)
                                           : hodge::run_ci(in, opts);
    if (opts.json)
      std::cout << hodge::render_json(rep, opts.timings);
    else
      std::cout << hodge::render_text(rep);
    if (opts.timings && !opts.json)
      for (const auto& [name, ms] : rep.timings_ms)
        std::cerr << name << ": " << ms << " ms\n";
    return 0;
  } catch (const hodge::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hodge::IndexOutOfRange& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hodge::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const hodge::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
