#include "dilbert/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "dilbert/errors.hpp"

namespace dilbert {

namespace {

EvalReport from_counts(std::size_t tp, std::size_t predicted, std::size_t gold) {
  EvalReport report;
  report.true_positives = tp;
  report.predicted_spans = predicted;
  report.gold_spans = gold;
  report.precision = predicted > 0 ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
  report.recall = gold > 0 ? static_cast<double>(tp) / static_cast<double>(gold) : 0.0;
  const double pr = report.precision + report.recall;
  report.f1 = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;
  report.undefined = (predicted == 0 && gold == 0);
  return report;
}

void check_alignment(const std::vector<std::vector<BioTag>>& predicted,
                     const std::vector<std::vector<BioTag>>& gold) {
  if (predicted.size() != gold.size()) {
    throw ConfigError("predicted has " + std::to_string(predicted.size()) +
                      " sentences, gold has " + std::to_string(gold.size()));
  }
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i].size() != gold[i].size()) {
      throw ConfigError("sentence " + std::to_string(i) + ": predicted length " +
                        std::to_string(predicted[i].size()) + " != gold length " +
                        std::to_string(gold[i].size()));
    }
  }
}

std::size_t count_matches(const std::vector<AspectSpan>& a, const std::vector<AspectSpan>& b) {
  // Both sides are sorted and disjoint, so a linear merge suffices.
  std::size_t matches = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++matches;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return matches;
}

}  // namespace

EvalReport exact_match_f1(const std::vector<std::vector<BioTag>>& predicted,
                          const std::vector<std::vector<BioTag>>& gold) {
  check_alignment(predicted, gold);
  std::size_t tp = 0;
  std::size_t total_predicted = 0;
  std::size_t total_gold = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const std::vector<AspectSpan> pred_spans = decode_spans(predicted[i]);
    const std::vector<AspectSpan> gold_spans = decode_spans(gold[i]);
    tp += count_matches(pred_spans, gold_spans);
    total_predicted += pred_spans.size();
    total_gold += gold_spans.size();
  }
  return from_counts(tp, total_predicted, total_gold);
}

EvalReport f1_excluding_category_names(const std::vector<std::vector<BioTag>>& predicted,
                                       const std::vector<std::vector<BioTag>>& gold,
                                       const std::vector<std::vector<std::string>>& tokens,
                                       const CategorySet& categories) {
  check_alignment(predicted, gold);
  if (tokens.size() != gold.size()) {
    throw ConfigError("tokens has " + std::to_string(tokens.size()) + " sentences, gold has " +
                      std::to_string(gold.size()));
  }
  std::size_t tp = 0;
  std::size_t total_predicted = 0;
  std::size_t total_gold = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (tokens[i].size() != gold[i].size()) {
      throw ConfigError("sentence " + std::to_string(i) + ": token/tag length mismatch");
    }
    std::vector<AspectSpan> pred_spans = decode_spans(predicted[i]);
    std::vector<AspectSpan> gold_spans = decode_spans(gold[i]);

    std::vector<AspectSpan> dropped;
    std::vector<AspectSpan> kept_gold;
    for (const AspectSpan& span : gold_spans) {
      const bool single = span.start == span.end;
      if (single && categories.contains(tokens[i][static_cast<std::size_t>(span.start)])) {
        dropped.push_back(span);
      } else {
        kept_gold.push_back(span);
      }
    }
    std::vector<AspectSpan> kept_pred;
    for (const AspectSpan& span : pred_spans) {
      if (!std::binary_search(dropped.begin(), dropped.end(), span)) kept_pred.push_back(span);
    }

    tp += count_matches(kept_pred, kept_gold);
    total_predicted += kept_pred.size();
    total_gold += kept_gold.size();
  }
  return from_counts(tp, total_predicted, total_gold);
}

AggregateReport aggregate(const std::vector<SeedResult>& results) {
  AggregateReport report;
  report.per_seed = results;

  std::vector<std::string> order;
  std::map<std::string, std::vector<double>> f1s;
  for (const SeedResult& result : results) {
    if (!f1s.count(result.variant)) order.push_back(result.variant);
    f1s[result.variant].push_back(result.report.f1);
  }
  for (const std::string& variant : order) {
    const std::vector<double>& values = f1s[variant];
    AggregateRow row;
    row.variant = variant;
    double sum = 0.0;
    for (double v : values) sum += v;
    row.mean_f1 = sum / static_cast<double>(values.size());
    if (values.size() >= 2) {
      double sq = 0.0;
      for (double v : values) sq += (v - row.mean_f1) * (v - row.mean_f1);
      row.std_f1 = std::sqrt(sq / static_cast<double>(values.size()));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_metric(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

void write_report_tsv(const std::string& path, const std::vector<SeedResult>& results) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (const SeedResult& result : results) {
    out << result.variant << '\t' << result.seed << '\t' << format_metric(result.report.precision)
        << '\t' << format_metric(result.report.recall) << '\t' << format_metric(result.report.f1)
        << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_aggregate_tsv(const std::string& path, const AggregateReport& report) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (const SeedResult& result : report.per_seed) {
    out << result.variant << '\t' << result.seed << '\t' << format_metric(result.report.precision)
        << '\t' << format_metric(result.report.recall) << '\t' << format_metric(result.report.f1)
        << '\n';
  }
  for (const AggregateRow& row : report.rows) {
    out << row.variant << "\tmean\t\t\t" << format_metric(row.mean_f1) << '\n';
    if (row.std_f1.has_value()) {
      out << row.variant << "\tstd\t\t\t" << format_metric(*row.std_f1) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace dilbert
