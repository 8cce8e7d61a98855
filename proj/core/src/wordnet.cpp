#include "sentorient/wordnet.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace sentorient {

using detail::ends_with;
using detail::split_ws;
using detail::starts_with;
using detail::to_lower;

namespace {

constexpr std::array<std::string_view, 4> kPosNames = {"noun", "verb", "adj",
                                                       "adv"};

[[noreturn]] void parse_error(const std::string& file, size_t line_no,
                              const std::string& why) {
  std::ostringstream os;
  os << "wordnet: " << file << ":" << line_no << ": " << why;
  throw std::runtime_error(os.str());
}

bool parse_uint(std::string_view s, std::uint32_t& out, int base = 10) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
  return ec == std::errc() && ptr == s.data() + s.size();
}

WnPos pos_of_char(char c) {
  switch (c) {
    case 'n': return WnPos::Noun;
    case 'v': return WnPos::Verb;
    case 'r': return WnPos::Adv;
    default: return WnPos::Adj;  // 'a' and satellite 's'
  }
}

// Adjective members may carry a syntactic-position marker, e.g. "galore(ip)".
std::string normalize_member(std::string_view word) {
  std::string w = to_lower(word);
  if (!w.empty() && w.back() == ')') {
    size_t open = w.rfind('(');
    if (open != std::string::npos) w.resize(open);
  }
  return w;
}

struct DetachmentRule {
  std::string_view suffix;
  std::string_view replacement;
};

const std::vector<DetachmentRule>& detachment_rules(WnPos pos) {
  static const std::vector<DetachmentRule> noun = {
      {"s", ""},     {"ses", "s"},  {"xes", "x"}, {"zes", "z"},
      {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"},
  };
  static const std::vector<DetachmentRule> verb = {
      {"s", ""},  {"ies", "y"}, {"es", "e"}, {"es", ""},
      {"ed", "e"}, {"ed", ""},  {"ing", "e"}, {"ing", ""},
  };
  static const std::vector<DetachmentRule> adj = {
      {"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"},
  };
  static const std::vector<DetachmentRule> adv = {};
  switch (pos) {
    case WnPos::Noun: return noun;
    case WnPos::Verb: return verb;
    case WnPos::Adj: return adj;
    default: return adv;
  }
}

}  // namespace

std::string_view to_string(WnPos pos) {
  return kPosNames[static_cast<size_t>(pos)];
}

std::optional<WnPos> parse_wn_pos(std::string_view name) {
  if (name == "noun" || name == "n") return WnPos::Noun;
  if (name == "verb" || name == "v") return WnPos::Verb;
  if (name == "adj" || name == "a") return WnPos::Adj;
  if (name == "adv" || name == "r") return WnPos::Adv;
  return std::nullopt;
}

WordNetDb WordNetDb::load(const std::filesystem::path& dir) {
  WordNetDb db;
  for (size_t p = 0; p < 4; ++p) {
    PosData& pd = db.pos_[p];
    const std::string posname(kPosNames[p]);

    // ---- data.<pos>
    {
      const auto path = dir / ("data." + posname);
      std::ifstream in(path);
      if (!in)
        throw std::runtime_error("wordnet: missing file " + path.string());
      std::string line;
      size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || starts_with(line, "  ")) continue;
        std::string_view head(line);
        std::string_view gloss;
        size_t bar = head.find(" | ");
        if (bar != std::string_view::npos) {
          gloss = head.substr(bar + 3);
          head = head.substr(0, bar);
        }
        auto t = split_ws(head);
        if (t.size() < 5) parse_error(path.string(), line_no, "short line");

        WnSynset syn;
        syn.gloss = std::string(detail::trim(gloss));
        if (!parse_uint(t[0], syn.offset))
          parse_error(path.string(), line_no, "bad synset offset");
        if (t[2].size() != 1)
          parse_error(path.string(), line_no, "bad ss_type");
        syn.ss_type = t[2][0];
        std::uint32_t w_cnt = 0;
        if (!parse_uint(t[3], w_cnt, 16) || w_cnt == 0)
          parse_error(path.string(), line_no, "bad word count");
        size_t i = 4;
        if (t.size() < i + 2 * w_cnt + 1)
          parse_error(path.string(), line_no, "truncated word list");
        for (std::uint32_t k = 0; k < w_cnt; ++k) {
          syn.words.push_back(normalize_member(t[i]));
          std::uint32_t lex_id = 0;
          if (!parse_uint(t[i + 1], lex_id, 16))
            parse_error(path.string(), line_no, "bad lex_id");
          syn.lex_ids.push_back(static_cast<int>(lex_id));
          i += 2;
        }
        std::uint32_t p_cnt = 0;
        if (!parse_uint(t[i], p_cnt))
          parse_error(path.string(), line_no, "bad pointer count");
        ++i;
        if (t.size() < i + 4 * p_cnt)
          parse_error(path.string(), line_no, "truncated pointer list");
        for (std::uint32_t k = 0; k < p_cnt; ++k) {
          WnPointer ptr;
          ptr.symbol = std::string(t[i]);
          if (!parse_uint(t[i + 1], ptr.offset))
            parse_error(path.string(), line_no, "bad pointer offset");
          if (t[i + 2].size() != 1)
            parse_error(path.string(), line_no, "bad pointer pos");
          ptr.pos = t[i + 2][0];
          std::uint32_t st = 0;
          if (t[i + 3].size() != 4 || !parse_uint(t[i + 3], st, 16))
            parse_error(path.string(), line_no, "bad source/target field");
          ptr.source_word = static_cast<int>(st >> 8);
          ptr.target_word = static_cast<int>(st & 0xFF);
          syn.pointers.push_back(std::move(ptr));
          i += 4;
        }
        // verb frames, if any, follow here; not used
        pd.synsets.emplace(syn.offset, std::move(syn));
      }
    }

    // ---- index.<pos>
    {
      const auto path = dir / ("index." + posname);
      std::ifstream in(path);
      if (!in)
        throw std::runtime_error("wordnet: missing file " + path.string());
      std::string line;
      size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || starts_with(line, "  ")) continue;
        auto t = split_ws(line);
        if (t.size() < 6) parse_error(path.string(), line_no, "short line");
        std::string lemma = to_lower(t[0]);
        std::uint32_t synset_cnt = 0, p_cnt = 0;
        if (!parse_uint(t[2], synset_cnt) || synset_cnt == 0)
          parse_error(path.string(), line_no, "bad synset_cnt");
        if (!parse_uint(t[3], p_cnt))
          parse_error(path.string(), line_no, "bad p_cnt");
        size_t off_start = 4 + p_cnt + 2;  // skip ptr symbols + sense counts
        if (t.size() != off_start + synset_cnt)
          parse_error(path.string(), line_no, "offset count mismatch");
        std::vector<std::uint32_t> offsets;
        offsets.reserve(synset_cnt);
        for (std::uint32_t k = 0; k < synset_cnt; ++k) {
          std::uint32_t off = 0;
          if (!parse_uint(t[off_start + k], off))
            parse_error(path.string(), line_no, "bad offset");
          offsets.push_back(off);
        }
        pd.index.emplace(std::move(lemma), std::move(offsets));
      }
    }

    // ---- <pos>.exc
    {
      const auto path = dir / (posname + ".exc");
      std::ifstream in(path);
      if (!in)
        throw std::runtime_error("wordnet: missing file " + path.string());
      std::string line;
      size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || starts_with(line, "  ")) continue;
        auto t = split_ws(line);
        if (t.size() < 2)
          parse_error(path.string(), line_no, "expected form and lemma");
        auto& lemmas = pd.exceptions[to_lower(t[0])];
        for (size_t k = 1; k < t.size(); ++k) {
          std::string lemma = to_lower(t[k]);
          if (std::find(lemmas.begin(), lemmas.end(), lemma) == lemmas.end())
            lemmas.push_back(std::move(lemma));
        }
      }
    }
  }

  // ---- validation: index offsets resolve, antonym pointers reciprocate
  for (size_t p = 0; p < 4; ++p) {
    const PosData& pd = db.pos_[p];
    for (const auto& [lemma, offsets] : pd.index) {
      for (std::uint32_t off : offsets) {
        if (!pd.synsets.count(off)) {
          std::ostringstream os;
          os << "index." << kPosNames[p] << ": lemma '" << lemma
             << "' references missing synset " << off;
          db.warnings_.push_back(os.str());
        }
      }
    }
    for (const auto& [off, syn] : pd.synsets) {
      for (const auto& ptr : syn.pointers) {
        if (ptr.symbol != "!") continue;
        const PosData& tpd = db.pos_[static_cast<size_t>(pos_of_char(ptr.pos))];
        auto it = tpd.synsets.find(ptr.offset);
        bool reciprocal = false;
        if (it != tpd.synsets.end()) {
          for (const auto& back : it->second.pointers) {
            if (back.symbol == "!" && back.offset == off &&
                back.source_word == ptr.target_word &&
                back.target_word == ptr.source_word) {
              reciprocal = true;
              break;
            }
          }
        }
        if (!reciprocal) {
          std::ostringstream os;
          os << "data." << kPosNames[p] << ": synset " << off
             << " antonym pointer to " << ptr.offset << " is not reciprocated";
          db.warnings_.push_back(os.str());
        }
      }
    }
  }
  return db;
}

WordNetDb load_wordnet(const std::filesystem::path& dir) {
  return WordNetDb::load(dir);
}

bool WordNetDb::has_lemma(const std::string& lemma, WnPos pos) const {
  return data(pos).index.count(lemma) > 0;
}

const std::vector<std::uint32_t>* WordNetDb::lookup(const std::string& lemma,
                                                    WnPos pos) const {
  auto it = data(pos).index.find(lemma);
  return it == data(pos).index.end() ? nullptr : &it->second;
}

const WnSynset* WordNetDb::synset(std::uint32_t offset, WnPos pos) const {
  auto it = data(pos).synsets.find(offset);
  return it == data(pos).synsets.end() ? nullptr : &it->second;
}

std::vector<std::string> WordNetDb::lemmatize(const std::string& surface,
                                              WnPos pos) const {
  const PosData& pd = data(pos);
  std::vector<std::string> out;
  auto push_unique = [&out](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  if (auto it = pd.exceptions.find(surface); it != pd.exceptions.end())
    for (const auto& lemma : it->second) push_unique(lemma);
  for (const auto& rule : detachment_rules(pos)) {
    if (surface.size() > rule.suffix.size() &&
        ends_with(surface, rule.suffix)) {
      std::string cand =
          surface.substr(0, surface.size() - rule.suffix.size());
      cand += rule.replacement;
      if (pd.index.count(cand)) push_unique(cand);
    }
  }
  if (pd.index.count(surface)) push_unique(surface);
  return out;
}

std::set<std::string> WordNetDb::related_lemmas(const std::string& lemma,
                                                WnPos pos, Relation rel,
                                                bool similar_expansion) const {
  std::set<std::string> out;
  const std::vector<std::uint32_t>* offsets = lookup(lemma, pos);
  if (!offsets) return out;
  for (std::uint32_t off : *offsets) {
    const WnSynset* syn = synset(off, pos);
    if (!syn) continue;
    if (rel == Relation::Synonym) {
      out.insert(syn->words.begin(), syn->words.end());
      if (pos == WnPos::Adj && similar_expansion) {
        for (const auto& ptr : syn->pointers) {
          if (ptr.symbol != "&") continue;
          if (const WnSynset* sim = synset(ptr.offset, pos_of_char(ptr.pos)))
            out.insert(sim->words.begin(), sim->words.end());
        }
      }
    } else {
      for (const auto& ptr : syn->pointers) {
        if (ptr.symbol != "!") continue;
        // lemma-level pointer: only follow when it departs from our word
        if (ptr.source_word > 0) {
          size_t idx = static_cast<size_t>(ptr.source_word - 1);
          if (idx >= syn->words.size() || syn->words[idx] != lemma) continue;
        }
        const WnSynset* tgt = synset(ptr.offset, pos_of_char(ptr.pos));
        if (!tgt) continue;
        if (ptr.target_word > 0) {
          size_t idx = static_cast<size_t>(ptr.target_word - 1);
          if (idx < tgt->words.size()) out.insert(tgt->words[idx]);
        } else {
          out.insert(tgt->words.begin(), tgt->words.end());
        }
      }
    }
  }
  out.erase(lemma);
  return out;
}

std::vector<std::string> WordNetDb::all_lemmas(WnPos pos) const {
  std::vector<std::string> out;
  out.reserve(data(pos).index.size());
  for (const auto& [lemma, offsets] : data(pos).index) out.push_back(lemma);
  std::sort(out.begin(), out.end());
  return out;
}

size_t WordNetDb::synset_count(WnPos pos) const {
  return data(pos).synsets.size();
}

}  // namespace sentorient
