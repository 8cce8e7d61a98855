#include "sentorient/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace sentorient {

using detail::split;
using detail::to_lower;
using detail::trim;

std::string to_string(const Provenance& p) {
  switch (p.kind) {
    case ProvenanceKind::Initial: return "initial";
    case ProvenanceKind::ViaSynonym:
      return "synonym(" + p.source + "," + std::string(to_string(p.pos)) + ")";
    default:
      return "antonym(" + p.source + "," + std::string(to_string(p.pos)) + ")";
  }
}

std::optional<Provenance> parse_provenance(std::string_view s) {
  if (s == "initial") return Provenance{};
  ProvenanceKind kind;
  if (detail::starts_with(s, "synonym(")) kind = ProvenanceKind::ViaSynonym;
  else if (detail::starts_with(s, "antonym(")) kind = ProvenanceKind::ViaAntonym;
  else return std::nullopt;
  if (s.back() != ')') return std::nullopt;
  std::string_view inner = s.substr(8, s.size() - 9);
  size_t comma = inner.rfind(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto pos = parse_wn_pos(inner.substr(comma + 1));
  if (!pos || comma == 0) return std::nullopt;
  return Provenance{kind, std::string(inner.substr(0, comma)), *pos};
}

const SeedEntry* SeedLexicon::find(const std::string& lemma) const {
  auto it = entries_.find(lemma);
  return it == entries_.end() ? nullptr : &it->second;
}

bool SeedLexicon::insert(const std::string& lemma, WordPolarity polarity,
                         const Provenance& prov) {
  auto it = entries_.find(lemma);
  if (it != entries_.end()) {
    if (it->second.polarity != polarity)
      throw std::logic_error("lexicon: '" + lemma +
                             "' would hold both polarities");
    return false;
  }
  entries_.emplace(lemma, SeedEntry{polarity, prov, next_order_++});
  return true;
}

SeedLexicon load_seed(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("lexicon: cannot read " + path.string());
  SeedLexicon lex;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto cols = split(line, '\t');
    auto fail = [&](const std::string& why) {
      std::ostringstream os;
      os << "lexicon: " << path.string() << ":" << line_no << ": " << why;
      throw std::runtime_error(os.str());
    };
    if (cols.size() != 2 && cols.size() != 3) fail("expected 2 or 3 columns");
    std::string lemma = to_lower(trim(cols[0]));
    if (lemma.empty()) fail("empty lemma");
    auto polarity = parse_word_polarity(trim(cols[1]));
    if (!polarity) fail("unknown polarity '" + std::string(trim(cols[1])) + "'");
    Provenance prov;
    if (cols.size() == 3) {
      auto parsed = parse_provenance(trim(cols[2]));
      if (!parsed) fail("unparseable provenance '" + std::string(trim(cols[2])) + "'");
      prov = *parsed;
    }
    if (const SeedEntry* existing = lex.find(lemma)) {
      if (existing->polarity != *polarity)
        fail("conflicting duplicate '" + lemma + "'");
      continue;  // same polarity: deduplicate
    }
    lex.insert(lemma, *polarity, prov);
  }
  if (lex.size() == 0)
    throw std::runtime_error("lexicon: " + path.string() +
                             " holds no entries; an empty seed cannot classify");
  return lex;
}

void save_lexicon(const SeedLexicon& lex, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("lexicon: cannot write " + path.string());
  out << "# lemma\tpolarity\tprovenance\n";
  for (const auto& [lemma, entry] : lex) {
    out << lemma << '\t' << to_string(entry.polarity) << '\t'
        << to_string(entry.provenance) << '\n';
  }
  if (!out)
    throw std::runtime_error("lexicon: failed writing " + path.string());
}

namespace {

struct MatchDecision {
  WordPolarity polarity;  // majority polarity of the matched seed entries
  std::string deciding;   // lexicographically smallest entry of that polarity
  bool conflict;
};

// `matched` is sorted (set iteration order).
MatchDecision decide(const std::vector<std::string>& matched,
                     const SeedLexicon& lex) {
  int pos = 0, neg = 0;
  for (const auto& m : matched) {
    if (lex.find(m)->polarity == WordPolarity::Positive) ++pos;
    else ++neg;
  }
  MatchDecision d;
  d.conflict = pos > 0 && neg > 0;
  if (pos == neg) {
    d.deciding = matched.front();
    d.polarity = lex.find(d.deciding)->polarity;
    return d;
  }
  d.polarity = pos > neg ? WordPolarity::Positive : WordPolarity::Negative;
  for (const auto& m : matched) {
    if (lex.find(m)->polarity == d.polarity) {
      d.deciding = m;
      break;
    }
  }
  return d;
}

}  // namespace

Resolution resolve_polarity(const std::string& lemma, WnPos pos,
                            SeedLexicon& lex, const WordNetDb& db, bool grow,
                            bool similar_expansion) {
  Resolution r;
  r.lemma = lemma;

  TraceStep direct{TraceStep::Kind::Direct, {lemma}, {}, std::nullopt, "", false};
  if (const SeedEntry* entry = lex.find(lemma)) {
    direct.matched.push_back(lemma);
    direct.decided = entry->polarity;
    direct.deciding = lemma;
    r.trace.push_back(std::move(direct));
    r.polarity = entry->polarity;
    r.provenance = entry->provenance;
    return r;
  }
  r.trace.push_back(std::move(direct));

  auto run_step = [&](TraceStep::Kind kind, Relation rel) -> bool {
    auto related = db.related_lemmas(lemma, pos, rel, similar_expansion);
    TraceStep step{kind, {related.begin(), related.end()}, {}, std::nullopt,
                   "", false};
    for (const auto& cand : step.candidates)
      if (lex.contains(cand)) step.matched.push_back(cand);
    if (step.matched.empty()) {
      r.trace.push_back(std::move(step));
      return false;
    }
    MatchDecision d = decide(step.matched, lex);
    WordPolarity result = rel == Relation::Synonym ? d.polarity
                                                   : flip(d.polarity);
    step.decided = result;
    step.deciding = d.deciding;
    step.conflict = d.conflict;
    r.trace.push_back(std::move(step));
    r.polarity = result;
    r.provenance = Provenance{rel == Relation::Synonym
                                  ? ProvenanceKind::ViaSynonym
                                  : ProvenanceKind::ViaAntonym,
                              d.deciding, pos};
    if (grow) lex.insert(lemma, result, r.provenance);
    return true;
  };

  if (run_step(TraceStep::Kind::Synonyms, Relation::Synonym)) return r;
  run_step(TraceStep::Kind::Antonyms, Relation::Antonym);
  return r;
}

std::string render_trace(const Resolution& r) {
  std::ostringstream os;
  os << r.lemma << ":\n";
  for (const auto& step : r.trace) {
    const char* name = step.kind == TraceStep::Kind::Direct ? "direct"
                       : step.kind == TraceStep::Kind::Synonyms ? "synonyms"
                                                                : "antonyms";
    os << "  " << name << ":";
    if (step.kind != TraceStep::Kind::Direct) {
      os << " tried " << step.candidates.size();
    }
    if (step.matched.empty()) {
      os << " no match\n";
      continue;
    }
    os << " matched [";
    for (size_t i = 0; i < step.matched.size(); ++i) {
      if (i) os << ' ';
      os << step.matched[i];
    }
    os << "]";
    if (step.conflict) os << " (conflicting polarities)";
    if (step.decided)
      os << " -> " << to_string(*step.decided) << " via " << step.deciding;
    os << "\n";
  }
  if (r.polarity)
    os << "  result: " << to_string(*r.polarity) << " ("
       << to_string(r.provenance) << ")\n";
  else
    os << "  result: unknown\n";
  return os.str();
}

SeedLexicon expand_closure(const SeedLexicon& lex, const WordNetDb& db,
                           const std::vector<std::string>& vocabulary,
                           int depth, const std::vector<WnPos>& poses,
                           bool similar_expansion) {
  std::vector<std::string> vocab(vocabulary);
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());

  SeedLexicon cur = lex;
  for (int round = 0; round < depth; ++round) {
    SeedLexicon next = cur;
    bool grew = false;
    for (const auto& lemma : vocab) {
      if (cur.contains(lemma)) continue;
      for (WnPos pos : poses) {
        if (!db.has_lemma(lemma, pos)) continue;
        Resolution r =
            resolve_polarity(lemma, pos, cur, db, /*grow=*/false,
                             similar_expansion);
        if (r.hit()) {
          next.insert(lemma, *r.polarity, r.provenance);
          grew = true;
          break;
        }
      }
    }
    cur = std::move(next);
    if (!grew) break;
  }
  return cur;
}

std::vector<std::string> validate_lexicon(const SeedLexicon& lex,
                                          const WordNetDb& db,
                                          bool similar_expansion) {
  std::vector<std::string> issues;
  for (const auto& [lemma, entry] : lex) {
    // chain walk
    std::unordered_set<std::string> visited;
    const std::string* cur = &lemma;
    const SeedEntry* e = &entry;
    for (;;) {
      if (!visited.insert(*cur).second) {
        issues.push_back("provenance cycle through '" + *cur + "'");
        break;
      }
      if (e->provenance.kind == ProvenanceKind::Initial) break;
      const SeedEntry* src = lex.find(e->provenance.source);
      if (!src) {
        issues.push_back("'" + *cur + "' has dangling source '" +
                         e->provenance.source + "'");
        break;
      }
      cur = &e->provenance.source;
      e = src;
    }
    // replay one step
    if (entry.provenance.kind == ProvenanceKind::Initial) continue;
    const SeedEntry* src = lex.find(entry.provenance.source);
    if (!src) continue;  // reported above
    Relation rel = entry.provenance.kind == ProvenanceKind::ViaSynonym
                       ? Relation::Synonym
                       : Relation::Antonym;
    auto related = db.related_lemmas(lemma, entry.provenance.pos, rel,
                                     similar_expansion);
    if (!related.count(entry.provenance.source)) {
      issues.push_back("'" + lemma + "': source '" + entry.provenance.source +
                       "' is not a current " +
                       (rel == Relation::Synonym ? std::string("synonym")
                                                 : std::string("antonym")));
      continue;
    }
    WordPolarity replayed = rel == Relation::Synonym ? src->polarity
                                                     : flip(src->polarity);
    if (replayed != entry.polarity)
      issues.push_back("'" + lemma + "': replayed polarity disagrees");
  }
  return issues;
}

Resolution CachedResolver::resolve(const std::string& lemma, WnPos pos) {
  std::string key = std::string(to_string(pos)) + ":" + lemma;
  if (unknown_.count(key)) {
    Resolution r;
    r.lemma = lemma;
    return r;
  }
  size_t before = lex_.size();
  Resolution r = resolve_polarity(lemma, pos, lex_, db_, grow_, similar_);
  if (!r.hit()) {
    unknown_.insert(key);
  } else if (lex_.size() != before) {
    unknown_.clear();  // the lexicon grew; cached misses may now resolve
  }
  return r;
}

}  // namespace sentorient
