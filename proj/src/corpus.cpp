#include "dilbert/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "dilbert/errors.hpp"
#include "dilbert/rng.hpp"

namespace dilbert {

namespace {

constexpr std::string_view kEdgePunct = ".,!?;:()\"'";

bool is_edge_punct(char c) { return kEdgePunct.find(c) != std::string_view::npos; }

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool has_whitespace(std::string_view text) {
  return std::any_of(text.begin(), text.end(), is_space);
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

}  // namespace

char to_char(BioTag tag) {
  switch (tag) {
    case BioTag::O: return 'O';
    case BioTag::B: return 'B';
    case BioTag::I: return 'I';
  }
  throw ConfigError("invalid BioTag value");
}

BioTag parse_bio_tag(std::string_view text) {
  if (text == "O") return BioTag::O;
  if (text == "B") return BioTag::B;
  if (text == "I") return BioTag::I;
  throw ParseError("unknown BIO tag '" + std::string(text) + "'");
}

bool CategorySet::contains(std::string_view name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> tokenize(std::string_view text) {
  const std::string lowered = lowercase(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < lowered.size()) {
    while (i < lowered.size() && is_space(lowered[i])) ++i;
    if (i >= lowered.size()) break;
    std::size_t j = i;
    while (j < lowered.size() && !is_space(lowered[j])) ++j;
    std::string_view piece(lowered.data() + i, j - i);
    i = j;

    // Peel punctuation off both ends; the core keeps interior punctuation.
    std::size_t lo = 0;
    std::size_t hi = piece.size();
    while (lo < hi && is_edge_punct(piece[lo])) ++lo;
    while (hi > lo && is_edge_punct(piece[hi - 1])) --hi;
    for (std::size_t k = 0; k < lo; ++k) tokens.emplace_back(1, piece[k]);
    if (hi > lo) tokens.emplace_back(piece.substr(lo, hi - lo));
    for (std::size_t k = hi; k < piece.size(); ++k) tokens.emplace_back(1, piece[k]);
  }
  return tokens;
}

std::vector<TaggedSentence> load_bio_dataset(const std::string& path) {
  std::ifstream in = open_for_read(path);
  std::vector<TaggedSentence> dataset;
  TaggedSentence current;
  std::string line;
  std::size_t line_no = 0;

  auto flush = [&]() {
    if (!current.tokens.empty()) {
      dataset.push_back(std::move(current));
      current = {};
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      flush();
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected exactly 2 tab-separated fields");
    }
    std::string token = lowercase(std::string_view(line).substr(0, tab));
    const std::string_view tag_text = std::string_view(line).substr(tab + 1);
    if (token.empty() || has_whitespace(token)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": invalid token '" + token + "'");
    }
    BioTag tag;
    try {
      tag = parse_bio_tag(tag_text);
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    current.tokens.push_back(std::move(token));
    current.tags.push_back(tag);
  }
  flush();
  return dataset;
}

void save_bio_dataset(const std::vector<TaggedSentence>& dataset, const std::string& path) {
  std::ofstream out = open_for_write(path);
  for (std::size_t s = 0; s < dataset.size(); ++s) {
    const TaggedSentence& sentence = dataset[s];
    if (sentence.tokens.size() != sentence.tags.size()) {
      throw ConfigError("sentence " + std::to_string(s) + ": token/tag length mismatch");
    }
    if (s > 0) out << '\n';
    for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
      out << sentence.tokens[t] << '\t' << to_char(sentence.tags[t]) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

CategorySet load_categories(const std::string& path, std::string domain_id) {
  std::ifstream in = open_for_read(path);
  CategorySet set;
  set.domain_id = std::move(domain_id);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string name = lowercase(line);
    if (has_whitespace(name)) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": category names must be single tokens, got '" + name + "'");
    }
    if (seen.insert(name).second) set.names.push_back(std::move(name));
  }
  return set;
}

void save_categories(const CategorySet& categories, const std::string& path) {
  std::ofstream out = open_for_write(path);
  for (const std::string& name : categories.names) out << name << '\n';
  if (!out) throw IoError("write failed: " + path);
}

UnlabeledCorpus load_unlabeled_corpus(const std::string& path, std::string domain_id) {
  std::ifstream in = open_for_read(path);
  UnlabeledCorpus corpus;
  corpus.domain_id = std::move(domain_id);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> tokens = tokenize(line);
    if (!tokens.empty()) corpus.sentences.push_back(std::move(tokens));
  }
  return corpus;
}

void save_unlabeled_corpus(const UnlabeledCorpus& corpus, const std::string& path) {
  std::ofstream out = open_for_write(path);
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t t = 0; t < sentence.size(); ++t) {
      if (t > 0) out << ' ';
      out << sentence[t];
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

std::vector<AspectSpan> decode_spans(const std::vector<BioTag>& tags) {
  std::vector<AspectSpan> spans;
  int open_start = -1;
  for (int i = 0; i < static_cast<int>(tags.size()); ++i) {
    switch (tags[i]) {
      case BioTag::O:
        if (open_start >= 0) {
          spans.push_back({open_start, i - 1});
          open_start = -1;
        }
        break;
      case BioTag::B:
        if (open_start >= 0) spans.push_back({open_start, i - 1});
        open_start = i;
        break;
      case BioTag::I:
        // Stray I repairs to a fresh span.
        if (open_start < 0) open_start = i;
        break;
    }
  }
  if (open_start >= 0) spans.push_back({open_start, static_cast<int>(tags.size()) - 1});
  return spans;
}

std::vector<BioTag> encode_spans(const std::vector<AspectSpan>& spans, int length) {
  std::vector<BioTag> tags(static_cast<std::size_t>(length), BioTag::O);
  for (const AspectSpan& span : spans) {
    if (span.start < 0 || span.end < span.start || span.end >= length) {
      throw ConfigError("span out of bounds for sentence length " + std::to_string(length));
    }
    tags[static_cast<std::size_t>(span.start)] = BioTag::B;
    for (int i = span.start + 1; i <= span.end; ++i) {
      tags[static_cast<std::size_t>(i)] = BioTag::I;
    }
  }
  return tags;
}

std::size_t sentence_byte_size(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return 0;
  std::size_t bytes = tokens.size() - 1;  // separating spaces
  for (const std::string& token : tokens) bytes += token.size();
  return bytes;
}

UnlabeledCorpus subsample(const UnlabeledCorpus& corpus, std::size_t byte_budget,
                          std::uint64_t seed) {
  std::vector<std::size_t> order(corpus.sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);

  UnlabeledCorpus out;
  out.domain_id = corpus.domain_id;
  std::size_t used = 0;
  for (std::size_t index : order) {
    const std::size_t bytes = sentence_byte_size(corpus.sentences[index]);
    if (used + bytes > byte_budget) break;
    out.sentences.push_back(corpus.sentences[index]);
    used += bytes;
  }
  return out;
}

}  // namespace dilbert
