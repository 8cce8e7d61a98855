#ifndef SENTORIENT_POLARITY_HPP
#define SENTORIENT_POLARITY_HPP

#include <optional>
#include <string_view>

namespace sentorient {

// Word-level polarity. Documents additionally admit Neutral.
enum class WordPolarity { Positive, Negative };
enum class DocPolarity { Positive, Negative, Neutral };

constexpr WordPolarity flip(WordPolarity p) {
  return p == WordPolarity::Positive ? WordPolarity::Negative
                                     : WordPolarity::Positive;
}

std::string_view to_string(WordPolarity p);
std::string_view to_string(DocPolarity p);

// Accepts the lowercase names "positive"/"negative" (and "neutral" for
// documents); anything else yields nullopt.
std::optional<WordPolarity> parse_word_polarity(std::string_view s);
std::optional<DocPolarity> parse_doc_polarity(std::string_view s);

}  // namespace sentorient

#endif
