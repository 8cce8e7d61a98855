#ifndef SENTORIENT_CLASSIFIER_HPP
#define SENTORIENT_CLASSIFIER_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sentorient/corpus.hpp"
#include "sentorient/lexicon.hpp"

namespace sentorient {

struct ClassifierConfig {
  // Penn tag prefixes whose tokens are opinion-word candidates.
  std::vector<std::string> candidate_tag_prefixes{"JJ", "RB", "VB"};
  std::set<std::string> negation_cues{"n't", "never", "no", "not"};
  int negation_window = 3;
  bool grow_lexicon = true;       // online mode; false = frozen
  bool similar_expansion = true;  // adjective similar-to hop in lookups

  void include_nouns() { candidate_tag_prefixes.push_back("NN"); }
};

struct OpinionHit {
  int token_index = 0;
  std::string lemma;
  WordPolarity base_polarity = WordPolarity::Positive;
  bool negated = false;
  WordPolarity effective_polarity = WordPolarity::Positive;
};

struct DocumentVerdict {
  std::string doc_id;
  std::vector<OpinionHit> hits;
  long pos_count = 0;
  long neg_count = 0;
  DocPolarity polarity = DocPolarity::Neutral;
};

struct CorpusSummary {
  long n_positive = 0;
  long n_negative = 0;
  long n_neutral = 0;
  long total = 0;
};

// Indices of candidate-tagged tokens, excluding negation cues and copulas.
std::vector<int> extract_opinion_candidates(const Document& doc,
                                            const ClassifierConfig& cfg);

// True when a negation cue occurs within `negation_window` tokens before
// `index` inside the same sentence. Presence flips once.
bool detect_negation(const Document& doc, int index,
                     const ClassifierConfig& cfg);

// Counting plus majority vote; positive iff pos_count > neg_count,
// negative iff neg_count > pos_count, neutral on a tie (including 0-0).
DocumentVerdict make_verdict(std::string doc_id, std::vector<OpinionHit> hits);

DocumentVerdict classify_document(const Document& doc, CachedResolver& resolver,
                                  const ClassifierConfig& cfg);

// Documents processed in the given order; in online mode each resolution
// may grow the shared lexicon, so the call is strictly sequential.
std::pair<std::vector<DocumentVerdict>, CorpusSummary> classify_corpus(
    const std::vector<Document>& docs, SeedLexicon& lex, const WordNetDb& db,
    const ClassifierConfig& cfg);

// Part of speech a candidate tag maps to for lexicon lookups.
WnPos pos_for_tag(std::string_view tag);

}  // namespace sentorient

#endif
