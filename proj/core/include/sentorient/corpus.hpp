#ifndef SENTORIENT_CORPUS_HPP
#define SENTORIENT_CORPUS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentorient/polarity.hpp"

namespace sentorient {

struct RawDocument {
  std::string id;
  std::string text;
  std::optional<DocPolarity> gold_label;
};

// Surface form plus the sentence it belongs to; what the tagger consumes.
struct SentToken {
  std::string surface;
  int sentence_index = 0;
  bool operator==(const SentToken&) const = default;
};

struct Token {
  std::string surface;
  std::string lower;  // case-folded surface
  std::string tag;    // Penn Treebank tag, or the punctuation mark itself
  int sentence_index = 0;
  int token_index = 0;
  bool operator==(const Token&) const = default;
};

struct Document {
  std::string id;
  std::optional<DocPolarity> gold_label;
  std::vector<Token> tokens;
};

enum class CorpusFormat { DirOfTxt, Jsonl, TsvLabeled };

std::optional<CorpusFormat> parse_corpus_format(std::string_view name);

struct CorpusOptions {
  // Strict mode aborts on a malformed line; otherwise the line is skipped
  // and the report appended to `warnings` when provided.
  bool strict = true;
  std::vector<std::string>* warnings = nullptr;
  // File extension a DirOfTxt corpus selects (".tagged" for pretagged).
  std::string extension = ".txt";
};

// Loads one RawDocument per *.txt file (DirOfTxt) or per line (Jsonl,
// TsvLabeled). Output is sorted by id; duplicate ids are an error.
std::vector<RawDocument> load_corpus(const std::filesystem::path& path,
                                     CorpusFormat format,
                                     const CorpusOptions& opts = {});

// Markup stripping, entity decoding, typographic-punctuation folding and
// whitespace normalization. Total and idempotent.
std::string preprocess(std::string_view text);

// Whitespace/punctuation tokenizer with Penn-style contraction splitting
// ("don't" -> "do" "n't") and sentence boundaries after . ! ? followed by
// whitespace plus a capital letter, or end of text.
std::vector<SentToken> tokenize(std::string_view text);

}  // namespace sentorient

#endif
