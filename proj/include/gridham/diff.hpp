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

// Instance enumeration and the predicate-versus-oracle comparison.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gridham/alphabet.hpp"
#include "gridham/grid.hpp"
#include "gridham/oracle.hpp"
#include "gridham/rect.hpp"
#include "gridham/validate.hpp"

namespace gridham {

/// Inclusive integer range; lo > hi is the empty range.
struct IntRange {
  int lo = 1;
  int hi = 0;

  bool empty() const { return lo > hi; }
  std::string to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }
};

enum class PairPolicy { AllPairs, ColorCompatible, Sample };

struct EndpointPolicy {
  PairPolicy kind = PairPolicy::AllPairs;
  std::size_t samples = 0;  // Sample only: pairs drawn per shape
  std::uint64_t seed = 0;

  static EndpointPolicy all() { return {}; }
  static EndpointPolicy compatible() { return {PairPolicy::ColorCompatible, 0, 0}; }
  static EndpointPolicy sample(std::size_t k, std::uint64_t seed) {
    return {PairPolicy::Sample, k, seed};
  }

  std::string to_string() const {
    switch (kind) {
      case PairPolicy::AllPairs: return "all";
      case PairPolicy::ColorCompatible: return "compatible";
      case PairPolicy::Sample:
        return "sample(" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ")";
    }
    return "?";
  }
};

struct Family {
  ShapeKind kind = ShapeKind::Rect;
  IntRange m;
  IntRange n;
  EndpointPolicy pairs;

  std::string describe() const {
    return std::string(gridham::to_string(kind)) + " m=" + m.to_string() + " n=" + n.to_string() +
           " pairs=" + pairs.to_string();
  }
};

inline Shape make_shape(ShapeKind kind, int m, int n) {
  switch (kind) {
    case ShapeKind::Rect: return RectShape(m, n);
    case ShapeKind::L: return LShape(m, n);
    case ShapeKind::C: return CShape(m, n);
  }
  throw GridError(ErrorKind::InvalidShape, "unknown shape kind");
}

/// Vertices of a shape in lexicographic (x, then y) order.
inline std::vector<Coord> vertices_of(const Shape& shape) {
  const RectShape box = bounding_rect(shape);
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(vertex_count(shape)));
  for (int x = 1; x <= box.m; ++x) {
    for (int y = 1; y <= box.n; ++y) {
      if (contains(shape, Coord{x, y})) out.push_back(Coord{x, y});
    }
  }
  return out;
}

namespace detail {

// k distinct indices from [0, total), sorted. Floyd's algorithm on raw
// mt19937_64 output so the selection is the same on every standard library.
inline std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t k,
                                                 std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  if (k >= total) {
    out.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) out[i] = i;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - k; j < total; ++j) {
    const std::uint64_t r = rng() % (j + 1);
    if (!chosen.insert(r).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace detail

/// Unordered endpoint pairs (s before t lexicographically), shapes ordered
/// by m then n. Deterministic for a fixed family.
inline std::vector<ProblemInstance> enumerate_instances(const Family& family) {
  std::vector<ProblemInstance> out;
  if (family.m.empty() || family.n.empty()) return out;
  for (int m = family.m.lo; m <= family.m.hi; ++m) {
    for (int n = family.n.lo; n <= family.n.hi; ++n) {
      const Shape shape = make_shape(family.kind, m, n);
      const std::vector<Coord> vs = vertices_of(shape);
      const std::uint64_t count = vs.size();
      auto emit = [&](std::size_t i, std::size_t j) {
        if (family.pairs.kind == PairPolicy::ColorCompatible &&
            !color_compatible(shape, vs[i], vs[j])) {
          return;
        }
        out.emplace_back(shape, vs[i], vs[j]);
      };
      if (family.pairs.kind != PairPolicy::Sample) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
          for (std::size_t j = i + 1; j < vs.size(); ++j) emit(i, j);
        }
        continue;
      }
      const std::uint64_t total = count * (count - (count > 0 ? 1 : 0)) / 2;
      const auto picks = detail::sample_indices(total, family.pairs.samples,
                                                family.pairs.seed ^ (static_cast<std::uint64_t>(m) << 32 | n));
      std::size_t p = 0;
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < vs.size() && p < picks.size(); ++i) {
        const std::uint64_t row = vs.size() - i - 1;
        while (p < picks.size() && picks[p] < idx + row) {
          emit(i, static_cast<std::size_t>(i + 1 + (picks[p] - idx)));
          ++p;
        }
        idx += row;
      }
    }
  }
  return out;
}

inline bool predicate_verdict(const ProblemInstance& inst, CArmRule rule) {
  return shape_acceptable(inst, rule);
}

struct DiffEntry {
  ProblemInstance instance;
  bool predicate = false;          // predicate under the report's rule
  bool literal_predicate = false;  // predicate with the paper-literal C clause
  Outcome oracle = Outcome::NotExists;
  bool in_paper_class = true;      // both predicate variants agree on this instance

  std::string to_string() const {
    std::ostringstream os;
    os << describe(instance.shape) << " s=" << instance.s << " t=" << instance.t
       << " predicate=" << (predicate ? "acceptable" : "not-acceptable")
       << " oracle=" << gridham::to_string(oracle)
       << " in-paper-class=" << (in_paper_class ? "yes" : "no");
    return os.str();
  }
};

struct DiffReport {
  std::string family;
  CArmRule rule = CArmRule::Mirrored;
  std::size_t tested = 0;
  std::size_t outside_paper_class = 0;
  std::vector<DiffEntry> mismatches;
  std::vector<DiffEntry> literal_mismatches;  // same comparison with the paper-literal predicate
  std::vector<DiffEntry> exhausted;
  std::vector<DiffEntry> oracle_faults;       // asymmetric verdicts or invalid oracle paths

  bool clean() const { return mismatches.empty() && exhausted.empty() && oracle_faults.empty(); }

  std::string to_text() const {
    std::ostringstream os;
    os << "family: " << family << "\n";
    os << "rule: " << (rule == CArmRule::Mirrored ? "mirrored" : "paper-strict") << "\n";
    os << "tested: " << tested << "\n";
    os << "mismatches: " << mismatches.size() << "\n";
    os << "exhausted: " << exhausted.size() << "\n";
    os << "oracle-faults: " << oracle_faults.size() << "\n";
    os << "outside-paper-class: " << outside_paper_class << "\n";
    os << "paper-literal-mismatches: " << literal_mismatches.size() << "\n";
    for (const DiffEntry& e : mismatches) os << "mismatch " << e.to_string() << "\n";
    for (const DiffEntry& e : exhausted) os << "exhausted " << e.to_string() << "\n";
    for (const DiffEntry& e : oracle_faults) os << "oracle-fault " << e.to_string() << "\n";
    return os.str();
  }
};

namespace detail {

inline bool entry_less(const DiffEntry& a, const DiffEntry& b) {
  const auto key = [](const DiffEntry& e) {
    return std::tuple(static_cast<int>(kind_of(e.instance.shape)), param_m(e.instance.shape),
                      param_n(e.instance.shape), e.instance.s, e.instance.t);
  };
  return key(a) < key(b);
}

struct DiffResult {
  DiffEntry entry;
  bool fault = false;
};

inline DiffResult diff_one(const ProblemInstance& inst, CArmRule rule, const SearchBudget& budget) {
  DiffResult r{DiffEntry{inst}};
  r.entry.predicate = predicate_verdict(inst, rule);
  r.entry.literal_predicate = predicate_verdict(inst, CArmRule::PaperLiteral);
  r.entry.in_paper_class = r.entry.predicate == r.entry.literal_predicate;
  const OracleVerdict fwd = brute_force_ham_path(inst.shape, inst.s, inst.t, budget);
  r.entry.oracle = fwd.outcome;
  if (fwd.exists() && validate_path(inst.shape, fwd.path, inst.s, inst.t)) r.fault = true;
  if (fwd.outcome != Outcome::Exhausted) {
    const OracleVerdict back = brute_force_ham_path(inst.shape, inst.t, inst.s, budget);
    if (back.outcome != Outcome::Exhausted && back.outcome != fwd.outcome) r.fault = true;
  }
  return r;
}

}  // namespace detail

inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Compares the acceptability predicate with the oracle on every instance.
/// Results are gathered per instance and aggregated in input order, so the
/// report does not depend on the worker count.
inline DiffReport diff_predicate_vs_oracle(const std::vector<ProblemInstance>& instances,
                                           const SearchBudget& budget, std::string family = {},
                                           CArmRule rule = CArmRule::Mirrored,
                                           unsigned workers = default_workers()) {
  std::vector<std::optional<detail::DiffResult>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      results[i] = detail::diff_one(instances[i], rule, budget);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(instances.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  DiffReport report;
  report.family = std::move(family);
  report.rule = rule;
  report.tested = instances.size();
  for (const auto& r : results) {
    const DiffEntry& e = r->entry;
    if (!e.in_paper_class) ++report.outside_paper_class;
    if (r->fault) report.oracle_faults.push_back(e);
    if (e.oracle == Outcome::Exhausted) {
      report.exhausted.push_back(e);
      continue;
    }
    const bool exists = e.oracle == Outcome::Exists;
    if (e.predicate != exists) report.mismatches.push_back(e);
    if (e.literal_predicate != exists) report.literal_mismatches.push_back(e);
  }
  for (auto* list : {&report.mismatches, &report.literal_mismatches, &report.exhausted,
                     &report.oracle_faults}) {
    std::sort(list->begin(), list->end(), detail::entry_less);
  }
  return report;
}

inline DiffReport diff_family(const Family& family, const SearchBudget& budget,
                              CArmRule rule = CArmRule::Mirrored,
                              unsigned workers = default_workers()) {
  return diff_predicate_vs_oracle(enumerate_instances(family), budget, family.describe(), rule,
                                  workers);
}

}  // namespace gridham
