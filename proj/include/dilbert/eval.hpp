#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilbert/corpus.hpp"

namespace dilbert {

/// Micro-averaged exact-match span scores over a corpus.
struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t true_positives = 0;
  std::size_t predicted_spans = 0;
  std::size_t gold_spans = 0;
  /// Set when both sides are empty and the 0/0 scores were pinned to 0.
  bool undefined = false;
};

struct SeedResult {
  std::string variant;
  std::uint64_t seed = 0;
  EvalReport report;
};

struct AggregateRow {
  std::string variant;
  double mean_f1 = 0.0;
  /// Population standard deviation over the seed set; absent for one seed.
  std::optional<double> std_f1;
};

struct AggregateReport {
  std::vector<SeedResult> per_seed;
  std::vector<AggregateRow> rows;
};

/// Exact-match span F1: a predicted span counts iff (sentence, start, end)
/// equals a gold span. Tag sequences must align per sentence.
EvalReport exact_match_f1(const std::vector<std::vector<BioTag>>& predicted,
                          const std::vector<std::vector<BioTag>>& gold);

/// Re-evaluation that drops every single-token gold span whose token is a
/// category name, along with any predicted span at exactly that position.
EvalReport f1_excluding_category_names(const std::vector<std::vector<BioTag>>& predicted,
                                       const std::vector<std::vector<BioTag>>& gold,
                                       const std::vector<std::vector<std::string>>& tokens,
                                       const CategorySet& categories);

/// Mean and population std of F1 per variant, preserving first-seen variant
/// order. Input order within a variant is kept for the per-seed rows.
AggregateReport aggregate(const std::vector<SeedResult>& results);

/// "variant<TAB>seed<TAB>precision<TAB>recall<TAB>f1" rows.
void write_report_tsv(const std::string& path, const std::vector<SeedResult>& results);

/// Per-seed rows followed by mean/std rows per variant.
void write_aggregate_tsv(const std::string& path, const AggregateReport& report);

std::string format_metric(double value);

}  // namespace dilbert
