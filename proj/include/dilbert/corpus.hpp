#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dilbert {

/// BIO tag for aspect spans. Numeric order O < B < I is load-bearing: the
/// tagger resolves argmax ties toward the smaller id.
enum class BioTag : std::uint8_t { O = 0, B = 1, I = 2 };

char to_char(BioTag tag);
BioTag parse_bio_tag(std::string_view text);  // throws ParseError

/// A sentence with one BIO tag per token.
struct TaggedSentence {
  std::vector<std::string> tokens;
  std::vector<BioTag> tags;

  bool operator==(const TaggedSentence&) const = default;
};

/// Inclusive token-index range of one aspect mention.
struct AspectSpan {
  int start = 0;
  int end = 0;

  auto operator<=>(const AspectSpan&) const = default;
};

/// Raw sentences without labels, tagged with the domain they came from.
struct UnlabeledCorpus {
  std::vector<std::vector<std::string>> sentences;
  std::string domain_id;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
};

/// Ordered, deduplicated single-token category names for one domain. The
/// file order is preserved: it defines CPP vector coordinates once unioned.
struct CategorySet {
  std::vector<std::string> names;
  std::string domain_id;

  bool contains(std::string_view name) const;
};

/// Lowercases, splits on whitespace and peels leading/trailing punctuation
/// in .,!?;:()"' into single-character tokens. Interior punctuation stays
/// attached (don't -> don't). Never emits an empty token.
std::vector<std::string> tokenize(std::string_view text);

/// Reads the CoNLL-style "token<TAB>tag" format, one sentence per
/// blank-line-separated block. Tokens are lowercased on load.
std::vector<TaggedSentence> load_bio_dataset(const std::string& path);

/// Writes the same format: exactly one blank line between blocks, trailing
/// newline, so save followed by load is the identity.
void save_bio_dataset(const std::vector<TaggedSentence>& dataset, const std::string& path);

/// One lowercased name per line; duplicates collapse to the first
/// occurrence; blank lines are skipped. Multi-token names are rejected.
CategorySet load_categories(const std::string& path, std::string domain_id);

void save_categories(const CategorySet& categories, const std::string& path);

/// One raw sentence per line, tokenized on load. Lines that tokenize to
/// nothing are dropped so every stored sentence is non-empty.
UnlabeledCorpus load_unlabeled_corpus(const std::string& path, std::string domain_id);

void save_unlabeled_corpus(const UnlabeledCorpus& corpus, const std::string& path);

/// Decodes BIO tags into spans. A stray I (at position 0 or right after an O)
/// starts a new span; this repair rule keeps decoding total.
std::vector<AspectSpan> decode_spans(const std::vector<BioTag>& tags);

/// Inverse of decode_spans for well-formed, disjoint, ordered spans.
std::vector<BioTag> encode_spans(const std::vector<AspectSpan>& spans, int length);

/// Byte size of a sentence counted as space-joined token text.
std::size_t sentence_byte_size(const std::vector<std::string>& tokens);

/// Draws sentences uniformly without replacement until the next draw would
/// exceed byte_budget. Deterministic for a fixed seed.
UnlabeledCorpus subsample(const UnlabeledCorpus& corpus, std::size_t byte_budget,
                          std::uint64_t seed);

}  // namespace dilbert
