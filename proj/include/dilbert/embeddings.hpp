#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dilbert/corpus.hpp"

namespace dilbert {

/// Static word vectors keyed by word. Insertion order is preserved so saves
/// are deterministic.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return order_.size(); }
  bool contains(const std::string& word) const { return vectors_.count(word) > 0; }

  /// nullptr when the word is absent.
  const Eigen::VectorXd* find(const std::string& word) const;

  /// Inserts or overwrites. The vector must have length dim and finite entries.
  void insert(const std::string& word, Eigen::VectorXd vector);

  const std::vector<std::string>& words() const { return order_; }

 private:
  int dim_;
  std::vector<std::string> order_;
  std::unordered_map<std::string, Eigen::VectorXd> vectors_;
};

struct SkipGramConfig {
  int dim = 32;
  int window = 5;
  int negatives = 5;
  int epochs = 1;
  double learning_rate = 0.025;
  int min_count = 2;
  std::uint64_t seed = 1;

  void validate() const;  // throws ConfigError
};

/// Skip-gram with negative sampling over the concatenated corpora. Noise
/// distribution is unigram^0.75; the per-position window shrink is uniform
/// in [1, window]; input vectors start uniform in [-0.5/dim, 0.5/dim].
/// Deterministic for a fixed seed when workers == 1. workers > 1 trains
/// hogwild-style over sentence shards and is explicitly nondeterministic.
EmbeddingTable train_skipgram(const std::vector<UnlabeledCorpus>& corpora,
                              const SkipGramConfig& config, int workers = 1);

/// Text format: header "<vocab_count> <dim>", then "<word> <v1> ... <vdim>"
/// rows. Duplicate words keep the last occurrence (with a warning on stderr).
EmbeddingTable load_text_embeddings(const std::string& path);

/// Emits >= 9 significant digits so a load restores vectors to 1e-8.
void save_text_embeddings(const EmbeddingTable& table, const std::string& path);

/// dot(u,v) / (|u||v|). Arguments must have equal length and nonzero norm.
double cosine(const Eigen::Ref<const Eigen::VectorXd>& u,
              const Eigen::Ref<const Eigen::VectorXd>& v);

}  // namespace dilbert
