#ifndef SENTORIENT_LEXICON_HPP
#define SENTORIENT_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sentorient/polarity.hpp"
#include "sentorient/wordnet.hpp"

namespace sentorient {

enum class ProvenanceKind { Initial, ViaSynonym, ViaAntonym };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Initial;
  std::string source;           // seed entry the polarity came from
  WnPos pos = WnPos::Adj;       // part of speech the lookup ran under
  bool operator==(const Provenance&) const = default;
};

std::string to_string(const Provenance& p);
std::optional<Provenance> parse_provenance(std::string_view s);

struct SeedEntry {
  WordPolarity polarity;
  Provenance provenance;
  std::uint64_t order = 0;  // insertion counter, for audit ordering
};

// Growing opinion-word lexicon. A lemma never holds both polarities;
// insertion with a conflicting polarity throws.
class SeedLexicon {
 public:
  bool contains(const std::string& lemma) const {
    return entries_.count(lemma) > 0;
  }
  const SeedEntry* find(const std::string& lemma) const;
  // Returns false when the lemma is already present with the same polarity.
  bool insert(const std::string& lemma, WordPolarity polarity,
              const Provenance& prov);
  size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<std::string, SeedEntry> entries_;
  std::uint64_t next_order_ = 0;
};

// TSV `lemma<TAB>polarity` with an optional third provenance column as
// written by save_lexicon. '#' comment lines and blank lines are skipped.
// Conflicting duplicates and an entirely empty seed are errors.
SeedLexicon load_seed(const std::filesystem::path& path);

// TSV `lemma<TAB>polarity<TAB>provenance`, sorted by lemma.
void save_lexicon(const SeedLexicon& lex, const std::filesystem::path& path);

struct TraceStep {
  enum class Kind { Direct, Synonyms, Antonyms } kind;
  std::vector<std::string> candidates;  // lemmas looked up in the seed
  std::vector<std::string> matched;     // candidates found in the seed
  std::optional<WordPolarity> decided;  // resulting word polarity, if any
  std::string deciding;                 // seed entry that decided
  bool conflict = false;  // matched entries carried both polarities
};

struct Resolution {
  std::string lemma;
  std::optional<WordPolarity> polarity;  // nullopt = Unknown
  Provenance provenance;                 // meaningful only on a hit
  std::vector<TraceStep> trace;
  bool hit() const { return polarity.has_value(); }
};

std::string render_trace(const Resolution& r);

// The three-step lookup: direct seed hit; else synonym match (same
// polarity); else antonym match (opposite polarity). Matches against
// several seed entries are decided by majority, ties by the
// lexicographically smallest matched entry. With `grow`, a synonym or
// antonym hit inserts the lemma into `lex`.
Resolution resolve_polarity(const std::string& lemma, WnPos pos,
                            SeedLexicon& lex, const WordNetDb& db, bool grow,
                            bool similar_expansion = true);

// Synchronous-update closure: each round resolves every unresolved
// vocabulary lemma against the previous round's lexicon, inserting the
// hits, until `depth` rounds or a fixed point. Lemmas are attempted per
// part of speech in `poses` order; the result is independent of
// vocabulary enumeration order.
SeedLexicon expand_closure(const SeedLexicon& lex, const WordNetDb& db,
                           const std::vector<std::string>& vocabulary,
                           int depth,
                           const std::vector<WnPos>& poses = {WnPos::Adj,
                                                              WnPos::Adv,
                                                              WnPos::Verb,
                                                              WnPos::Noun},
                           bool similar_expansion = true);

// Walks every provenance chain; returns human-readable violations
// (cycles, dangling sources, polarity mismatches, lookups that no longer
// reproduce the stored polarity). Empty means sound.
std::vector<std::string> validate_lexicon(const SeedLexicon& lex,
                                          const WordNetDb& db,
                                          bool similar_expansion = true);

// resolve_polarity with an Unknown cache; the cache is dropped whenever
// the lexicon grows.
class CachedResolver {
 public:
  CachedResolver(SeedLexicon& lex, const WordNetDb& db, bool grow,
                 bool similar_expansion = true)
      : lex_(lex), db_(db), grow_(grow), similar_(similar_expansion) {}

  Resolution resolve(const std::string& lemma, WnPos pos);
  SeedLexicon& lexicon() { return lex_; }
  const WordNetDb& db() const { return db_; }

 private:
  SeedLexicon& lex_;
  const WordNetDb& db_;
  bool grow_;
  bool similar_;
  std::unordered_set<std::string> unknown_;
};

}  // namespace sentorient

#endif
