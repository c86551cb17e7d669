// Copyright 2026 The gridham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gridham command-line front end.
//
// Exit codes: 0 ok, 1 negative answer (not acceptable, no path, mismatches),
// 2 invalid input, 3 search or construction exhausted.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "gridham/gridham.hpp"
#include "json.hpp"

namespace {

using gridham::Coord;
using gridham::ErrorKind;
using gridham::GridError;
using gridham::Path;
using gridham::ProblemInstance;
using gridham::Shape;
using gridham::ShapeKind;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;
constexpr int kExhausted = 3;

/// Raised for malformed user input; always maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ShapeKind parse_kind(const std::string& s) {
  if (s == "rect" || s == "R") return ShapeKind::Rect;
  if (s == "L") return ShapeKind::L;
  if (s == "C") return ShapeKind::C;
  throw InputError("--shape: expected rect, L or C, got '" + s + "'");
}

Coord parse_coord(const std::string& text, const char* field) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw InputError(std::string(field) + ": expected x,y, got '" + text + "'");
  }
  try {
    std::size_t a = 0, b = 0;
    const int x = std::stoi(text.substr(0, comma), &a);
    const int y = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument("trailing");
    return Coord{x, y};
  } catch (const std::logic_error&) {
    throw InputError(std::string(field) + ": expected x,y, got '" + text + "'");
  }
}

gridham::IntRange parse_range(const std::string& text, const char* field) {
  try {
    const auto dots = text.find("..");
    std::size_t a = 0, b = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &a);
      if (a != text.size()) throw std::invalid_argument("trailing");
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots), &a);
    const int hi = std::stoi(text.substr(dots + 2), &b);
    if (a != dots || b != text.size() - dots - 2) throw std::invalid_argument("trailing");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError(std::string(field) + ": expected N or LO..HI, got '" + text + "'");
  }
}

std::vector<int> parse_list(const std::string& text, const char* field) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InputError(std::string(field) + ": expected a comma-separated list of integers");
    }
  }
  if (out.empty()) throw InputError(std::string(field) + ": empty list");
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot rename onto " + path + ": " + ec.message());
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_atomic(out_path, content);
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

struct InstanceArgs {
  std::string shape = "rect";
  int m = 0;
  int n = 0;
  std::string s;
  std::string t;

  void attach(CLI::App* cmd) {
    cmd->add_option("--shape", shape, "rect, L or C")->capture_default_str();
    cmd->add_option("--m", m, "first shape parameter")->required();
    cmd->add_option("--n", n, "second shape parameter")->required();
    cmd->add_option("--s", s, "start vertex x,y")->required();
    cmd->add_option("--t", t, "end vertex x,y")->required();
  }

  ProblemInstance build() const {
    const Shape sh = gridham::make_shape(parse_kind(shape), m, n);
    return ProblemInstance(sh, parse_coord(s, "--s"), parse_coord(t, "--t"));
  }
};

Json coord_json(Coord c) { return Json::array({c.x, c.y}); }

Json instance_json(const ProblemInstance& inst) {
  Json j;
  j["shape"] = gridham::to_string(gridham::kind_of(inst.shape));
  j["m"] = gridham::param_m(inst.shape);
  j["n"] = gridham::param_n(inst.shape);
  j["s"] = coord_json(inst.s);
  j["t"] = coord_json(inst.t);
  return j;
}

Json path_json(const Path& path) {
  Json arr = Json::array();
  for (Coord c : path) arr.push_back(coord_json(c));
  return arr;
}

gridham::CArmRule rule_of(bool paper_strict) {
  return paper_strict ? gridham::CArmRule::PaperLiteral : gridham::CArmRule::Mirrored;
}

std::string render(const std::string& format, const Shape& shape, const Path& path,
                   const Json& json) {
  if (format == "json") return json.dump() + "\n";
  if (format == "ascii") return gridham::render_ascii(shape, path);
  if (format == "svg") return gridham::render_svg(shape, path);
  throw InputError("--format: expected json, ascii or svg, got '" + format + "'");
}

// ---------------------------------------------------------------------------

int cmd_solve(const InstanceArgs& args, const std::string& format, const std::string& out,
              bool paper_strict) {
  if (format != "json" && format != "ascii" && format != "svg") {
    throw InputError("--format: expected json, ascii or svg, got '" + format + "'");
  }
  const ProblemInstance inst = args.build();
  Json j = instance_json(inst);
  if (auto reason = gridham::refusal_reason(inst, rule_of(paper_strict))) {
    j["exists"] = false;
    j["reason"] = *reason;
    if (format == "json") {
      emit(out, j.dump() + "\n");
    } else {
      std::cout << "not acceptable: " << *reason << "\n";
    }
    return kNo;
  }
  try {
    const Path path = gridham::shape_ham_path(inst, rule_of(paper_strict));
    j["exists"] = true;
    j["path"] = path_json(path);
    emit(out, render(format, inst.shape, path, j));
    return kOk;
  } catch (const GridError& e) {
    if (e.kind() != ErrorKind::DecompositionExhausted) throw;
    j["exists"] = false;
    j["reason"] = "decomposition-exhausted";
    if (format == "json") {
      emit(out, j.dump() + "\n");
    } else {
      std::cout << "construction exhausted: " << e.what() << "\n";
    }
    std::cerr << e.what() << "\n";
    return kExhausted;
  }
}

int cmd_check(const InstanceArgs& args, bool paper_strict) {
  const ProblemInstance inst = args.build();
  if (auto reason = gridham::refusal_reason(inst, rule_of(paper_strict))) {
    std::cout << "not acceptable: " << *reason << "\n";
    return kNo;
  }
  std::cout << "acceptable\n";
  return kOk;
}

int cmd_cycle(int m, int n, const std::string& format, const std::string& out) {
  const gridham::RectShape r(m, n);
  gridham::Cycle c;
  try {
    c = gridham::rect_ham_cycle(r);
  } catch (const GridError& e) {
    if (e.kind() != ErrorKind::OddSized && e.kind() != ErrorKind::DegenerateDimension) throw;
    std::cout << "no cycle: " << e.what() << "\n";
    return kNo;
  }
  if (format == "json") {
    Json j;
    j["shape"] = "rect";
    j["m"] = m;
    j["n"] = n;
    j["cycle"] = path_json(c.order);
    emit(out, j.dump() + "\n");
  } else if (format == "ascii" || format == "svg") {
    // Drawn as the open path; the closing edge is implied.
    const std::string body = format == "ascii" ? gridham::render_ascii(r, c.order)
                                               : gridham::render_svg(r, c.order);
    emit(out, body);
  } else {
    throw InputError("--format: expected json, ascii or svg, got '" + format + "'");
  }
  return kOk;
}

int cmd_oracle(const InstanceArgs& args, std::int64_t max_expansions, std::int64_t max_vertices,
               const std::string& out) {
  const ProblemInstance inst = args.build();
  gridham::SearchBudget budget = gridham::SearchBudget::from_env();
  if (max_expansions > 0) budget.max_expansions = max_expansions;
  if (max_vertices > 0) budget.max_vertices = max_vertices;
  const gridham::OracleVerdict v = gridham::brute_force_ham_path(inst.shape, inst.s, inst.t, budget);
  Json j = instance_json(inst);
  j["exists"] = v.exists();
  if (v.exists()) {
    j["path"] = path_json(v.path);
  } else {
    j["reason"] = gridham::to_string(v.outcome);
  }
  emit(out, j.dump() + "\n");
  switch (v.outcome) {
    case gridham::Outcome::Exists: return kOk;
    case gridham::Outcome::NotExists: return kNo;
    case gridham::Outcome::Exhausted: return kExhausted;
  }
  return kExhausted;
}

Json entry_json(const gridham::DiffEntry& e) {
  Json j = instance_json(e.instance);
  j["predicate"] = e.predicate;
  j["oracle"] = gridham::to_string(e.oracle);
  j["in_paper_class"] = e.in_paper_class;
  return j;
}

int cmd_diff(const std::string& shape, const std::string& m_range, const std::string& n_range,
             const std::string& pairs, std::size_t samples, std::uint64_t seed, unsigned workers,
             bool paper_strict, std::int64_t max_expansions, std::int64_t max_vertices,
             const std::string& format, const std::string& out) {
  gridham::Family fam;
  fam.kind = parse_kind(shape);
  fam.m = parse_range(m_range, "--m");
  fam.n = parse_range(n_range, "--n");
  if (pairs == "all") {
    fam.pairs = gridham::EndpointPolicy::all();
  } else if (pairs == "compatible") {
    fam.pairs = gridham::EndpointPolicy::compatible();
  } else if (pairs == "sample") {
    if (samples == 0) throw InputError("--samples: must be positive with --pairs sample");
    fam.pairs = gridham::EndpointPolicy::sample(samples, seed);
  } else {
    throw InputError("--pairs: expected all, compatible or sample, got '" + pairs + "'");
  }
  if (format != "text" && format != "json") {
    throw InputError("--format: expected text or json, got '" + format + "'");
  }
  gridham::SearchBudget budget = gridham::SearchBudget::from_env();
  if (max_expansions > 0) budget.max_expansions = max_expansions;
  if (max_vertices > 0) budget.max_vertices = max_vertices;
  if (workers == 0) workers = gridham::default_workers();

  const gridham::DiffReport rep = gridham::diff_family(fam, budget, rule_of(paper_strict), workers);
  std::string body;
  if (format == "text") {
    body = rep.to_text();
  } else {
    Json j;
    j["family"] = rep.family;
    j["rule"] = paper_strict ? "paper-strict" : "mirrored";
    j["tested"] = rep.tested;
    j["outside_paper_class"] = rep.outside_paper_class;
    j["paper_literal_mismatches"] = rep.literal_mismatches.size();
    for (const char* key : {"mismatches", "exhausted", "oracle_faults"}) j[key] = Json::array();
    for (const auto& e : rep.mismatches) j["mismatches"].push_back(entry_json(e));
    for (const auto& e : rep.exhausted) j["exhausted"].push_back(entry_json(e));
    for (const auto& e : rep.oracle_faults) j["oracle_faults"].push_back(entry_json(e));
    body = j.dump(2) + "\n";
  }
  emit(out, body);
  if (!out.empty()) {
    std::cout << "tested " << rep.tested << ", mismatches " << rep.mismatches.size()
              << ", exhausted " << rep.exhausted.size() << "\n";
  }
  if (!rep.mismatches.empty() || !rep.oracle_faults.empty()) return kNo;
  if (!rep.exhausted.empty()) return kExhausted;
  return kOk;
}

// Default endpoints for a bench instance: the first acceptable pair among
// the bounding-box corners that belong to the shape.
std::optional<ProblemInstance> bench_instance(const Shape& shape) {
  const gridham::RectShape b = gridham::bounding_rect(shape);
  const Coord corners[] = {{1, 1}, {b.m, b.n}, {b.m, 1}, {1, b.n}};
  for (Coord s : corners) {
    for (Coord t : corners) {
      if (!(s < t) || !gridham::contains(shape, s) || !gridham::contains(shape, t)) continue;
      ProblemInstance inst(shape, s, t);
      if (gridham::shape_acceptable(inst)) return inst;
    }
  }
  return std::nullopt;
}

int cmd_bench(const std::string& shape, const std::string& sizes, int reps, double max_ratio,
              const std::string& out) {
  if (reps <= 0) throw InputError("--reps: must be positive");
  const ShapeKind kind = parse_kind(shape);
  const std::vector<int> ks = parse_list(sizes, "--sizes");
  std::ostringstream csv;
  csv << "shape,m,n,vertices,rep,wall_ns,ns_per_vertex\n";
  std::vector<std::pair<int, double>> medians;
  for (int k : ks) {
    const Shape sh = gridham::make_shape(kind, k, k);
    const auto inst = bench_instance(sh);
    if (!inst) throw InputError("no acceptable corner pair for " + gridham::describe(sh));
    const std::int64_t verts = gridham::vertex_count(sh);
    std::vector<double> per_vertex;
    for (int rep = 1; rep <= reps; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const Path p = gridham::shape_ham_path(*inst);
      const auto t1 = std::chrono::steady_clock::now();
      if (static_cast<std::int64_t>(p.size()) != verts) {
        throw GridError(ErrorKind::InvalidPath, "bench path has the wrong length");
      }
      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      const double npv = static_cast<double>(ns) / static_cast<double>(verts);
      per_vertex.push_back(npv);
      csv << gridham::to_string(kind) << ',' << k << ',' << k << ',' << verts << ',' << rep << ','
          << ns << ',' << npv << '\n';
    }
    std::sort(per_vertex.begin(), per_vertex.end());
    const std::size_t mid = per_vertex.size() / 2;
    const double median = per_vertex.size() % 2 ? per_vertex[mid]
                                                : (per_vertex[mid - 1] + per_vertex[mid]) / 2;
    medians.push_back({k, median});
  }
  emit(out, csv.str());
  std::ostream& summary = out.empty() ? std::cerr : std::cout;
  for (const auto& [k, med] : medians) {
    summary << "median " << gridham::to_string(kind) << " k=" << k << " ns_per_vertex=" << med << "\n";
  }
  if (medians.size() >= 2 && max_ratio > 0) {
    const auto smallest = *std::min_element(medians.begin(), medians.end());
    const auto largest = *std::max_element(medians.begin(), medians.end());
    const double ratio = largest.second / smallest.second;
    summary << "ratio k=" << largest.first << "/k=" << smallest.first << " = " << ratio
            << " (limit " << max_ratio << ")\n";
    if (ratio > max_ratio) return kNo;
  }
  return kOk;
}

struct ParsedPath {
  ProblemInstance instance;
  Path path;
  bool has_path;
};

ParsedPath parse_solution(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
    const std::string shape = j.at("shape").get<std::string>();
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const auto s = j.at("s");
    const auto t = j.at("t");
    ProblemInstance inst(gridham::make_shape(parse_kind(shape), m, n),
                         Coord{s.at(0).get<int>(), s.at(1).get<int>()},
                         Coord{t.at(0).get<int>(), t.at(1).get<int>()});
    Path path;
    const bool has = j.contains("path");
    if (has) {
      for (const auto& c : j.at("path")) path.push_back(Coord{c.at(0).get<int>(), c.at(1).get<int>()});
    }
    return {inst, path, has};
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed solution JSON: ") + e.what());
  }
}

int cmd_validate(const std::string& in) {
  const ParsedPath p = parse_solution(read_input(in));
  if (!p.has_path) {
    std::cout << "invalid: no path in input\n";
    return kNo;
  }
  if (auto v = gridham::validate_path(p.instance.shape, p.path, p.instance.s, p.instance.t)) {
    std::cout << "invalid: " << v->message() << "\n";
    return kNo;
  }
  std::cout << "valid: " << p.path.size() << " vertices\n";
  return kOk;
}

int cmd_render(const std::string& in, const std::string& format, const std::string& out) {
  const ParsedPath p = parse_solution(read_input(in));
  if (!p.has_path) throw InputError("input has no path to render");
  if (format == "ascii") {
    emit(out, gridham::render_ascii(p.instance.shape, p.path));
  } else if (format == "svg") {
    emit(out, gridham::render_svg(p.instance.shape, p.path));
  } else {
    throw InputError("--format: expected ascii or svg, got '" + format + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian paths in rectangular, L- and C-shaped grid graphs"};
  app.require_subcommand(1);

  InstanceArgs inst;
  std::string format = "json";
  std::string out;
  bool paper_strict = false;

  auto* solve = app.add_subcommand("solve", "construct a Hamiltonian path");
  inst.attach(solve);
  solve->add_option("--format", format, "json, ascii or svg")->capture_default_str();
  solve->add_option("--out", out, "write output to this file");
  solve->add_flag("--paper-strict", paper_strict, "C shapes: use only the L-part clause");

  auto* check = app.add_subcommand("check", "evaluate the acceptability predicate");
  InstanceArgs check_inst;
  check_inst.attach(check);
  check->add_flag("--paper-strict", paper_strict, "C shapes: use only the L-part clause");

  int cm = 0, cn = 0;
  std::string cycle_format = "json";
  std::string cycle_out;
  auto* cycle = app.add_subcommand("cycle", "Hamiltonian cycle of an even-sized rectangle");
  cycle->add_option("--m", cm, "width")->required();
  cycle->add_option("--n", cn, "height")->required();
  cycle->add_option("--format", cycle_format, "json, ascii or svg")->capture_default_str();
  cycle->add_option("--out", cycle_out, "write output to this file");

  InstanceArgs oracle_inst;
  std::int64_t max_expansions = 0;
  std::int64_t max_vertices = 0;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "exhaustive search");
  oracle_inst.attach(oracle);
  oracle->add_option("--max-expansions", max_expansions, "search node budget");
  oracle->add_option("--max-vertices", max_vertices, "largest shape searched");
  oracle->add_option("--out", oracle_out, "write output to this file");

  std::string d_shape = "rect", d_m = "1..4", d_n = "1..4", d_pairs = "all", d_format = "text";
  std::string d_out;
  std::size_t d_samples = 0;
  std::uint64_t d_seed = 1;
  unsigned d_workers = 0;
  bool d_strict = false;
  std::int64_t d_exp = 0, d_verts = 0;
  auto* diff = app.add_subcommand("diff", "compare the predicate with the oracle");
  diff->add_option("--shape", d_shape, "rect, L or C")->capture_default_str();
  diff->add_option("--m", d_m, "range LO..HI")->capture_default_str();
  diff->add_option("--n", d_n, "range LO..HI")->capture_default_str();
  diff->add_option("--pairs", d_pairs, "all, compatible or sample")->capture_default_str();
  diff->add_option("--samples", d_samples, "pairs per shape for --pairs sample");
  diff->add_option("--seed", d_seed, "sampling seed")->capture_default_str();
  diff->add_option("--workers", d_workers, "worker threads (default: logical CPUs)");
  diff->add_flag("--paper-strict", d_strict, "C shapes: use only the L-part clause");
  diff->add_option("--max-expansions", d_exp, "search node budget");
  diff->add_option("--max-vertices", d_verts, "largest shape searched");
  diff->add_option("--format", d_format, "text or json")->capture_default_str();
  diff->add_option("--out", d_out, "write the report to this file");

  std::string b_shape = "rect", b_sizes = "128,256,512,1024", b_out;
  int b_reps = 5;
  double b_ratio = 3.0;
  auto* bench = app.add_subcommand("bench", "time construction on k x k instances");
  bench->add_option("--shape", b_shape, "rect, L or C")->capture_default_str();
  bench->add_option("--sizes", b_sizes, "comma-separated k values")->capture_default_str();
  bench->add_option("--reps", b_reps, "repetitions per size")->capture_default_str();
  bench->add_option("--max-ratio", b_ratio, "largest/smallest median limit; 0 disables")
      ->capture_default_str();
  bench->add_option("--out", b_out, "write CSV to this file");

  std::string r_in, r_format = "ascii", r_out;
  auto* rend = app.add_subcommand("render", "draw a solution produced by solve");
  rend->add_option("--in", r_in, "solution JSON file, or - for stdin");
  rend->add_option("--format", r_format, "ascii or svg")->capture_default_str();
  rend->add_option("--out", r_out, "write output to this file");

  std::string v_in;
  auto* val = app.add_subcommand("validate", "check a solution produced by solve");
  val->add_option("--in", v_in, "solution JSON file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*solve) return cmd_solve(inst, format, out, paper_strict);
    if (*check) return cmd_check(check_inst, paper_strict);
    if (*cycle) return cmd_cycle(cm, cn, cycle_format, cycle_out);
    if (*oracle) return cmd_oracle(oracle_inst, max_expansions, max_vertices, oracle_out);
    if (*diff) {
      return cmd_diff(d_shape, d_m, d_n, d_pairs, d_samples, d_seed, d_workers, d_strict, d_exp,
                      d_verts, d_format, d_out);
    }
    if (*bench) return cmd_bench(b_shape, b_sizes, b_reps, b_ratio, b_out);
    if (*rend) return cmd_render(r_in, r_format, r_out);
    if (*val) return cmd_validate(v_in);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const GridError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::DecompositionExhausted: return kExhausted;
      case ErrorKind::NotAcceptable:
      case ErrorKind::NoFacingEdge:
      case ErrorKind::InvalidPath: return kNo;
      default: return kInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
