#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pglca/builder.hpp"
#include "pglca/kernels.hpp"
#include "pglca/postopt.hpp"
#include "pglca/search.hpp"
#include "pglca/verifier.hpp"

using namespace pglca;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int g = 3;
  int k = 0;
  std::string u;
  std::string v;
  std::string vectors;
  std::string c1;
  std::string in;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 0;
  int restarts = 1;
  unsigned threads = 0;
  std::string isa = "auto";
  std::string mode = "two";
  std::string objective = "full";
  std::string numbering = "id";
  std::string method = "classes";
  std::string drop_rows;
  int width = 0;
  bool fixed_row = false;
  bool no_constants = false;
  bool undeveloped_c1 = false;
};

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) throw UsageError("--seed is required for this subcommand");
  return *o.seed;
}

void require_g(const Options& o) {
  if (o.g < 3 || o.g > 10 || o.g == 7) throw UsageError("--g must be q+1 for q in {2,3,4,5,7,8,9}");
}

struct Starters {
  StarterVector u;
  std::optional<StarterVector> v;
};

Starters load_starters(const Options& o) {
  Starters s;
  try {
    if (!o.vectors.empty()) {
      if (!o.u.empty() || !o.v.empty()) throw UsageError("--vectors cannot be combined with --u/--v");
      std::ifstream is(o.vectors);
      if (!is) throw UsageError("--vectors: cannot open " + o.vectors);
      const auto vs = read_vectors(is, o.g);
      if (vs.empty() || vs.size() > 2) throw UsageError("--vectors: expected one or two vectors");
      s.u = vs[0];
      if (vs.size() == 2) s.v = vs[1];
    } else {
      if (o.u.empty()) throw UsageError("--u (or --vectors) is required");
      s.u = parse_symbols(o.u, o.g);
      if (!o.v.empty()) s.v = parse_symbols(o.v, o.g);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("starter vector: ") + e.what());
  }
  if (o.k != 0 && static_cast<int>(s.u.size()) != o.k)
    throw UsageError("--u has length " + std::to_string(s.u.size()) + " but --k is " + std::to_string(o.k));
  if (s.v && s.v->size() != s.u.size()) throw UsageError("--v length differs from --u");
  return s;
}

TestingArray load_input(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return load_array(path);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void emit_array(const Options& o, const TestingArray& a) {
  if (o.out.empty()) write_array(std::cout, a);
  else save_array(o.out, a);
}

std::vector<int> parse_rows(const std::string& text) {
  std::vector<int> rows;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      rows.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("--drop-rows: bad row '" + tok + "'");
    }
  }
  return rows;
}

int cmd_orbits(const Options& o) {
  require_g(o);
  const auto table = build_orbit_table(Group::of_order(o.g));
  if (o.numbering != "id" && o.g != 3) throw UsageError("--numbering listing/residual needs --g 3");
  std::istringstream dump(table.dump());
  std::string line;
  for (int id = 0; std::getline(dump, line); ++id) {
    int number = id;
    if (o.numbering == "listing") number = g3_numbering::listing(id, table);
    else if (o.numbering == "residual") number = g3_numbering::residual(id, table);
    std::cout << number << " | " << line << '\n';
  }
  return 0;
}

int cmd_classes(const Options& o) {
  if (o.k == 0) throw UsageError("--k is required");
  std::size_t total = 0;
  if (o.fixed_row) {
    const auto classes = enumerate_fixed_row_classes(o.k);
    for (const auto& c : classes) {
      std::cout << '[' << c.x << ',' << c.y << "] " << c.size << '\n';
      total += c.size;
    }
    std::cout << classes.size() << " fixed-row classes, " << total << " subsets\n";
  } else {
    const auto classes = enumerate_classes(o.k);
    for (const auto& c : classes) {
      std::cout << '[' << c.x << ',' << c.y << ',' << c.z << "] " << c.size << '\n';
      total += c.size;
    }
    std::cout << classes.size() << " classes, " << total << " subsets\n";
  }
  return 0;
}

int cmd_starter_check(const Options& o) {
  require_g(o);
  const auto s = load_starters(o);
  const auto orbits = build_orbit_table(Group::of_order(o.g));
  std::cout << format_report(starter_check(s.u, s.v, orbits), orbits);
  return 0;
}

int cmd_build(const Options& o) {
  require_g(o);
  const auto s = load_starters(o);
  std::optional<TestingArray> c1;
  if (!o.c1.empty()) c1 = load_input(o.c1, "--c1");
  if (c1 && (c1->rows() != static_cast<int>(s.u.size()) || c1->symbol_count() != o.g))
    throw UsageError("--c1 must have k rows over the same g");
  emit_array(o, assemble(s.u, s.v, c1, Group::of_order(o.g), {!o.no_constants, o.undeveloped_c1}));
  return 0;
}

int cmd_verify(const Options& o) {
  const auto a = load_input(o.in, "--in");
  const auto verdict = is_covering_array(a, o.threads);
  std::cout << "4-CA(" << a.columns() << ',' << a.rows() << ',' << a.symbol_count() << "): ";
  if (verdict.valid) {
    std::cout << "VALID\n";
    return 0;
  }
  const auto& w = *verdict.witness;
  std::cout << "INVALID (rows " << w.rows[0] << ',' << w.rows[1] << ',' << w.rows[2] << ',' << w.rows[3]
            << " miss " << tuple_string(w.tuple, a.symbol_count()) << ")\n";
  return kExitFailure;
}

int cmd_coverage(const Options& o) {
  CoverageResult r;
  if (!o.in.empty()) {
    r = coverage_brute(load_input(o.in, "--in"), o.threads);
  } else {
    require_g(o);
    const auto s = load_starters(o);
    const Group grp = Group::of_order(o.g);
    if (o.method == "brute") {
      r = coverage_brute(assemble(s.u, s.v, std::nullopt, grp, {!o.no_constants, false}), o.threads);
    } else {
      r = coverage_by_classes(s.u, s.v, build_orbit_table(grp), !o.no_constants);
    }
  }
  std::cout << r.to_record() << '\n';
  return 0;
}

int cmd_search(const Options& o) {
  require_g(o);
  SearchConfig cfg;
  cfg.seed = require_seed(o);
  if (o.k == 0) throw UsageError("--k is required");
  cfg.k = o.k;
  cfg.g = o.g;
  cfg.mode = o.mode == "one" ? SearchMode::one_vector : SearchMode::two_vector;
  cfg.objective = o.objective == "full" ? Objective::full : Objective::max_coverage;
  cfg.budget = o.budget == 0 ? 100000 : o.budget;
  cfg.restarts = o.restarts;
  cfg.threads = o.threads;
  cfg.include_constants = !o.no_constants;
  const auto res = search_starters(cfg, build_orbit_table(Group::of_order(o.g)));
  for (const auto& line : res.log) std::cerr << line << '\n';
  if (o.out.empty()) {
    write_vectors(std::cout, res.vectors, o.g);
  } else {
    std::ofstream os(o.out);
    write_vectors(os, res.vectors, o.g);
  }
  std::cerr << "best restart " << res.best_restart << ": " << res.residual.deficient.size()
            << " deficient classes, " << res.coverage.to_record() << '\n';
  return 0;
}

int cmd_search_c1(const Options& o) {
  require_g(o);
  const auto s = load_starters(o);
  if (o.width < 0) throw UsageError("--width must be non-negative");
  SearchConfig cfg;
  cfg.seed = require_seed(o);
  cfg.budget = o.budget == 0 ? 200000 : o.budget;
  cfg.restarts = o.restarts;
  const auto orbits = build_orbit_table(Group::of_order(o.g));
  const auto residual = starter_check(s.u, s.v, orbits);
  const auto res = search_residual_matrix(residual, o.width, cfg, orbits);
  std::cerr << residual.missing_pairs() << " missing pairs, " << res.unsatisfied
            << " obligations unsatisfied after " << res.moves << " moves\n";
  if (!res.success) return kExitFailure;
  emit_array(o, res.matrix);
  return 0;
}

int cmd_extend(const Options& o) {
  require_g(o);
  const auto s = load_starters(o);
  const auto orbits = build_orbit_table(Group::of_order(o.g));
  const auto candidates = check_extension(s.u, s.v, orbits);
  std::optional<ExtensionCandidate> chosen;
  for (const auto& c : candidates) {
    std::cerr << "u+" << symbol_char(c.u_symbol, o.g);
    if (c.v_symbol) std::cerr << " v+" << symbol_char(*c.v_symbol, o.g);
    std::cerr << ": " << (c.passes ? "passes" : "fails") << " (" << c.deficient_classes << " deficient)\n";
    if (c.passes && !chosen) chosen = c;
  }
  if (!chosen) return kExitFailure;
  emit_array(o, assemble_extended(s.u, chosen->u_symbol, s.v, chosen->v_symbol, Group::of_order(o.g),
                                  !o.no_constants));
  return 0;
}

int cmd_postopt(const Options& o) {
  const std::uint64_t seed = require_seed(o);
  auto a = load_input(o.in, "--in");
  if (!o.drop_rows.empty()) {
    const auto rows = parse_rows(o.drop_rows);
    for (int r : rows)
      if (r < 0 || r >= a.rows()) throw UsageError("--drop-rows: row " + std::to_string(r) + " out of range");
    a = a.drop_rows(rows);
  }
  PostoptStats stats;
  TestingArray out;
  try {
    out = post_optimize(a, o.budget == 0 ? 500 : o.budget, seed, &stats);
  } catch (const NotACoveringArray& e) {
    std::cerr << e.what() << '\n';
    return kExitFailure;
  }
  std::cerr << "n " << a.columns() << " -> " << out.columns() << " after " << stats.attempts << " rounds\n";
  emit_array(o, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strength-4 covering arrays from PGL(2,q) starter vectors"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (0 = machine parallelism)");
  app.add_option("--isa", o.isa, "Kernel set: auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  const auto add_g = [&](CLI::App* c) { c->add_option("--g", o.g, "Alphabet size q+1"); };
  const auto add_k = [&](CLI::App* c) { c->add_option("--k", o.k, "Degree (rows)")->check(CLI::PositiveNumber); };
  const auto add_vectors = [&](CLI::App* c) {
    c->add_option("--u", o.u, "First starter vector, e.g. 011*0");
    c->add_option("--v", o.v, "Second starter vector");
    c->add_option("--vectors", o.vectors, "File with one or two starter vectors");
  };
  const auto add_random = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "RNG seed (required)");
    c->add_option("--budget", o.budget, "Move or round budget");
  };

  auto* orbits = app.add_subcommand("orbits", "List the orbits of 4-tuples");
  add_g(orbits);
  orbits->add_option("--numbering", o.numbering, "id, listing or residual")
      ->check(CLI::IsMember({"id", "listing", "residual"}));

  auto* classes = app.add_subcommand("classes", "List cyclic classes of 4-subsets");
  add_k(classes);
  classes->add_flag("--fixed-row", o.fixed_row, "Classes that contain the fixed last row");

  auto* check = app.add_subcommand("starter-check", "Residual report for starter vectors");
  add_g(check);
  add_k(check);
  add_vectors(check);

  auto* build = app.add_subcommand("build", "Assemble [M^G, C1^G, C]");
  add_g(build);
  add_k(build);
  add_vectors(build);
  build->add_option("--c1", o.c1, "C1 array file");
  build->add_option("--out", o.out, "Output array file (default stdout)");
  build->add_flag("--no-constants", o.no_constants, "Omit the constant columns");
  build->add_flag("--undeveloped-c1", o.undeveloped_c1, "Append C1 without developing it");

  auto* verify = app.add_subcommand("verify", "Check that an array is a 4-CA");
  verify->add_option("--in", o.in, "Array file");

  auto* coverage = app.add_subcommand("coverage", "Coverage record of an array or starter vectors");
  add_g(coverage);
  add_k(coverage);
  add_vectors(coverage);
  coverage->add_option("--in", o.in, "Array file (brute force)");
  coverage->add_option("--method", o.method, "classes or brute for starter vectors")
      ->check(CLI::IsMember({"classes", "brute"}));
  coverage->add_flag("--no-constants", o.no_constants, "Omit the constant columns");

  auto* search = app.add_subcommand("search", "Hill-climbing search for starter vectors");
  add_g(search);
  add_k(search);
  add_random(search);
  search->add_option("--mode", o.mode, "one or two vectors")->check(CLI::IsMember({"one", "two"}));
  search->add_option("--objective", o.objective, "full or max-coverage")
      ->check(CLI::IsMember({"full", "max-coverage"}));
  search->add_option("--restarts", o.restarts, "Independent restarts")->check(CLI::PositiveNumber);
  search->add_option("--out", o.out, "Output vector file (default stdout)");
  search->add_flag("--no-constants", o.no_constants, "Score without the constant columns");

  auto* search_c1 = app.add_subcommand("search-c1", "Search a C1 block for the residual of starters");
  add_g(search_c1);
  add_k(search_c1);
  add_vectors(search_c1);
  add_random(search_c1);
  search_c1->add_option("--width", o.width, "Columns of C1")->required();
  search_c1->add_option("--restarts", o.restarts, "Independent restarts")->check(CLI::PositiveNumber);
  search_c1->add_option("--out", o.out, "Output array file (default stdout)");

  auto* extend = app.add_subcommand("extend", "Fixed last-row extension of length-(k-1) starters");
  add_g(extend);
  add_k(extend);
  add_vectors(extend);
  extend->add_option("--out", o.out, "Output array file (default stdout)");
  extend->add_flag("--no-constants", o.no_constants, "Omit the constant columns");

  auto* postopt = app.add_subcommand("postopt", "Randomized column reduction of a 4-CA");
  add_random(postopt);
  postopt->add_option("--in", o.in, "Input array file");
  postopt->add_option("--out", o.out, "Output array file (default stdout)");
  postopt->add_option("--drop-rows", o.drop_rows, "Comma-separated rows to delete first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (o.isa != "auto") {
      const auto isa = kernels::parse_isa(o.isa);
      if (isa == kernels::Isa::avx2 && !kernels::avx2_table()) throw UsageError("--isa avx2: not supported here");
      kernels::select(isa);
    }
    if (*orbits) return cmd_orbits(o);
    if (*classes) return cmd_classes(o);
    if (*check) return cmd_starter_check(o);
    if (*build) return cmd_build(o);
    if (*verify) return cmd_verify(o);
    if (*coverage) return cmd_coverage(o);
    if (*search) return cmd_search(o);
    if (*search_c1) return cmd_search_c1(o);
    if (*extend) return cmd_extend(o);
    if (*postopt) return cmd_postopt(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
