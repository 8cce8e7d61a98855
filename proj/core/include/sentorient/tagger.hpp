#ifndef SENTORIENT_TAGGER_HPP
#define SENTORIENT_TAGGER_HPP

#include <filesystem>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sentorient/corpus.hpp"

namespace sentorient {

// Unigram tag lexicon plus suffix heuristics for unknown words.
struct TagLexicon {
  // word -> (tag, relative frequency), ordered by frequency descending,
  // ties broken by tag name ascending. Frequencies per word sum to 1.
  std::unordered_map<std::string, std::vector<std::pair<std::string, double>>>
      word_tags;
  // (suffix, tag), first match wins.
  std::vector<std::pair<std::string, std::string>> suffix_rules;
  std::string default_tag = "NN";
  std::string proper_noun_tag = "NNP";
  std::string number_tag = "CD";

  // Most frequent tag, or empty when the word is unknown.
  const std::string* best_tag(const std::string& lower) const;
  bool has_reading(const std::string& lower, std::string_view tag) const;
  // Highest-frequency tag starting with `prefix`, or nullptr.
  const std::string* best_tag_with_prefix(const std::string& lower,
                                          std::string_view prefix) const;
};

const std::vector<std::pair<std::string, std::string>>& default_suffix_rules();

// TSV lines `word<TAB>tag<TAB>count`; counts for the same (word, tag) pair
// accumulate. Lines starting with '#' and blank lines are skipped.
TagLexicon load_tag_dictionary(const std::filesystem::path& path);

// Deterministic unigram tagging with contextual patch rules:
//   - after a determiner, an ambiguous VB* word with a noun reading -> NN
//   - after is/are/was/were, a word with an adjective reading -> JJ
//   - after a personal pronoun, a word with a verb reading -> that verb tag
// Unknown words fall to suffix rules, then NNP (capitalized, not sentence
// initial) or NN. Punctuation tokens are tagged as themselves.
std::vector<Token> tag(const std::vector<SentToken>& tokens,
                       const TagLexicon& lex);

// `word/TAG` items separated by single spaces; the split is at the last '/'.
std::vector<Token> parse_pretagged(std::string_view line);
std::string render_pretagged(const std::vector<Token>& tokens);

}  // namespace sentorient

#endif
