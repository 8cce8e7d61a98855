#include "sentorient/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_util.hpp"

namespace sentorient {

using detail::starts_with;

namespace {

const std::set<std::string>& copulas() {
  static const std::set<std::string> forms = {"am", "are", "be", "been",
                                              "is",  "was", "were"};
  return forms;
}

void check_config(const ClassifierConfig& cfg) {
  if (cfg.negation_window < 1)
    throw std::invalid_argument("classifier: negation window must be >= 1");
  if (cfg.candidate_tag_prefixes.empty())
    throw std::invalid_argument("classifier: no candidate tag prefixes");
}

}  // namespace

WnPos pos_for_tag(std::string_view tag) {
  if (starts_with(tag, "JJ")) return WnPos::Adj;
  if (starts_with(tag, "RB")) return WnPos::Adv;
  if (starts_with(tag, "VB") || tag == "MD") return WnPos::Verb;
  return WnPos::Noun;
}

std::vector<int> extract_opinion_candidates(const Document& doc,
                                            const ClassifierConfig& cfg) {
  check_config(cfg);
  std::vector<int> out;
  for (size_t i = 0; i < doc.tokens.size(); ++i) {
    const Token& tok = doc.tokens[i];
    bool candidate = false;
    for (const auto& prefix : cfg.candidate_tag_prefixes) {
      if (starts_with(tok.tag, prefix)) {
        candidate = true;
        break;
      }
    }
    if (!candidate) continue;
    if (cfg.negation_cues.count(tok.lower)) continue;
    if (copulas().count(tok.lower)) continue;
    out.push_back(static_cast<int>(i));
  }
  return out;
}

bool detect_negation(const Document& doc, int index,
                     const ClassifierConfig& cfg) {
  check_config(cfg);
  const int sentence = doc.tokens[static_cast<size_t>(index)].sentence_index;
  for (int back = 1; back <= cfg.negation_window; ++back) {
    int j = index - back;
    if (j < 0) break;
    const Token& tok = doc.tokens[static_cast<size_t>(j)];
    if (tok.sentence_index != sentence) break;
    if (cfg.negation_cues.count(tok.lower)) return true;
  }
  return false;
}

DocumentVerdict make_verdict(std::string doc_id,
                             std::vector<OpinionHit> hits) {
  DocumentVerdict v;
  v.doc_id = std::move(doc_id);
  v.hits = std::move(hits);
  for (const auto& hit : v.hits) {
    if (hit.effective_polarity == WordPolarity::Positive) ++v.pos_count;
    else ++v.neg_count;
  }
  if (v.pos_count > v.neg_count) v.polarity = DocPolarity::Positive;
  else if (v.neg_count > v.pos_count) v.polarity = DocPolarity::Negative;
  else v.polarity = DocPolarity::Neutral;
  return v;
}

DocumentVerdict classify_document(const Document& doc,
                                  CachedResolver& resolver,
                                  const ClassifierConfig& cfg) {
  std::vector<OpinionHit> hits;
  for (int idx : extract_opinion_candidates(doc, cfg)) {
    const Token& tok = doc.tokens[static_cast<size_t>(idx)];
    WnPos pos = pos_for_tag(tok.tag);
    std::vector<std::string> lemmas = resolver.db().lemmatize(tok.lower, pos);
    if (std::find(lemmas.begin(), lemmas.end(), tok.lower) == lemmas.end())
      lemmas.push_back(tok.lower);  // surface fallback for off-index words
    for (const auto& lemma : lemmas) {
      Resolution r = resolver.resolve(lemma, pos);
      if (!r.hit()) continue;
      OpinionHit hit;
      hit.token_index = tok.token_index;
      hit.lemma = lemma;
      hit.base_polarity = *r.polarity;
      hit.negated = detect_negation(doc, idx, cfg);
      hit.effective_polarity =
          hit.negated ? flip(hit.base_polarity) : hit.base_polarity;
      hits.push_back(std::move(hit));
      break;
    }
  }
  return make_verdict(doc.id, std::move(hits));
}

std::pair<std::vector<DocumentVerdict>, CorpusSummary> classify_corpus(
    const std::vector<Document>& docs, SeedLexicon& lex, const WordNetDb& db,
    const ClassifierConfig& cfg) {
  CachedResolver resolver(lex, db, cfg.grow_lexicon, cfg.similar_expansion);
  std::vector<DocumentVerdict> verdicts;
  verdicts.reserve(docs.size());
  CorpusSummary summary;
  for (const Document& doc : docs) {
    DocumentVerdict v = classify_document(doc, resolver, cfg);
    switch (v.polarity) {
      case DocPolarity::Positive: ++summary.n_positive; break;
      case DocPolarity::Negative: ++summary.n_negative; break;
      case DocPolarity::Neutral: ++summary.n_neutral; break;
    }
    ++summary.total;
    verdicts.push_back(std::move(v));
  }
  return {std::move(verdicts), summary};
}

}  // namespace sentorient
