#include "sentorient/polarity.hpp"

namespace sentorient {

std::string_view to_string(WordPolarity p) {
  return p == WordPolarity::Positive ? "positive" : "negative";
}

std::string_view to_string(DocPolarity p) {
  switch (p) {
    case DocPolarity::Positive: return "positive";
    case DocPolarity::Negative: return "negative";
    default: return "neutral";
  }
}

std::optional<WordPolarity> parse_word_polarity(std::string_view s) {
  if (s == "positive") return WordPolarity::Positive;
  if (s == "negative") return WordPolarity::Negative;
  return std::nullopt;
}

std::optional<DocPolarity> parse_doc_polarity(std::string_view s) {
  if (s == "positive") return DocPolarity::Positive;
  if (s == "negative") return DocPolarity::Negative;
  if (s == "neutral") return DocPolarity::Neutral;
  return std::nullopt;
}

}  // namespace sentorient
