#ifndef SENTORIENT_WORDNET_HPP
#define SENTORIENT_WORDNET_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sentorient {

enum class WnPos { Noun, Verb, Adj, Adv };
enum class Relation { Synonym, Antonym };

std::string_view to_string(WnPos pos);
std::optional<WnPos> parse_wn_pos(std::string_view name);

struct WnPointer {
  std::string symbol;      // e.g. "!", "&", "@", "~", "=", "+"
  std::uint32_t offset = 0;
  char pos = 0;            // n v a r (satellites appear as 'a')
  int source_word = 0;     // 0 = whole synset (semantic pointer)
  int target_word = 0;
};

struct WnSynset {
  std::uint32_t offset = 0;
  char ss_type = 0;  // n v a s r
  std::vector<std::string> words;  // lowercased, adjective markers stripped
  std::vector<int> lex_ids;
  std::vector<WnPointer> pointers;
  std::string gloss;
};

// Immutable after load; all queries are read-only.
class WordNetDb {
 public:
  // Expects index.{noun,verb,adj,adv}, data.{noun,verb,adj,adv} and
  // {noun,verb,adj,adv}.exc under `dir`. Malformed lines raise; referenced
  // but missing offsets and non-reciprocal antonym pointers are collected
  // as warnings.
  static WordNetDb load(const std::filesystem::path& dir);

  const std::vector<std::string>& warnings() const { return warnings_; }

  bool has_lemma(const std::string& lemma, WnPos pos) const;
  const std::vector<std::uint32_t>* lookup(const std::string& lemma,
                                           WnPos pos) const;
  const WnSynset* synset(std::uint32_t offset, WnPos pos) const;

  // Morphy-style normalization: exception-list hits, then detachment rules
  // whose result occurs in the index, then the surface itself if indexed.
  // Duplicates removed, order preserved, empty when nothing resolves.
  std::vector<std::string> lemmatize(const std::string& surface,
                                     WnPos pos) const;

  // Synonym: union of member lemmas over every synset containing `lemma`
  // (plus one similar-to hop for adjectives when `similar_expansion`).
  // Antonym: lemma-level '!' pointer targets. The query lemma itself is
  // excluded; unknown lemmas yield the empty set.
  std::set<std::string> related_lemmas(const std::string& lemma, WnPos pos,
                                       Relation rel,
                                       bool similar_expansion = true) const;

  // Sorted list of every index lemma of `pos`.
  std::vector<std::string> all_lemmas(WnPos pos) const;

  size_t synset_count(WnPos pos) const;

 private:
  struct PosData {
    std::unordered_map<std::string, std::vector<std::uint32_t>> index;
    std::unordered_map<std::uint32_t, WnSynset> synsets;
    std::unordered_map<std::string, std::vector<std::string>> exceptions;
  };
  const PosData& data(WnPos pos) const {
    return pos_[static_cast<size_t>(pos)];
  }
  std::array<PosData, 4> pos_;
  std::vector<std::string> warnings_;
};

WordNetDb load_wordnet(const std::filesystem::path& dir);

}  // namespace sentorient

#endif
