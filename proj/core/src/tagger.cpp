#include "sentorient/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace sentorient {

using detail::ends_with;
using detail::split;
using detail::to_lower;
using detail::trim;

namespace {

const std::set<std::string, std::less<>>& penn_tags() {
  static const std::set<std::string, std::less<>> tags = {
      "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
      "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
      "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
      "VBZ", "WDT", "WP", "WP$", "WRB"};
  return tags;
}

bool is_punct_token(std::string_view s) {
  for (char c : s) {
    unsigned char b = static_cast<unsigned char>(c);
    if (std::isalnum(b) || b >= 0x80) return false;
  }
  return !s.empty();
}

bool looks_like_number(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (c != '.' && c != ',' && c != '-' && c != '+' && c != '/')
      return false;
  }
  return digit;
}

}  // namespace

const std::string* TagLexicon::best_tag(const std::string& lower) const {
  auto it = word_tags.find(lower);
  if (it == word_tags.end() || it->second.empty()) return nullptr;
  return &it->second.front().first;
}

bool TagLexicon::has_reading(const std::string& lower,
                             std::string_view tag) const {
  auto it = word_tags.find(lower);
  if (it == word_tags.end()) return false;
  for (const auto& [t, f] : it->second)
    if (t == tag) return true;
  return false;
}

const std::string* TagLexicon::best_tag_with_prefix(
    const std::string& lower, std::string_view prefix) const {
  auto it = word_tags.find(lower);
  if (it == word_tags.end()) return nullptr;
  for (const auto& [t, f] : it->second)
    if (detail::starts_with(t, prefix)) return &t;
  return nullptr;
}

const std::vector<std::pair<std::string, std::string>>&
default_suffix_rules() {
  static const std::vector<std::pair<std::string, std::string>> rules = {
      {"ly", "RB"},   {"ing", "VBG"}, {"ed", "VBN"},  {"ness", "NN"},
      {"ment", "NN"}, {"tion", "NN"}, {"sion", "NN"}, {"ity", "NN"},
      {"ous", "JJ"},  {"ful", "JJ"},  {"able", "JJ"}, {"ible", "JJ"},
      {"ive", "JJ"},  {"less", "JJ"}, {"ish", "JJ"},  {"ss", "NN"},
      {"s", "NNS"},
  };
  return rules;
}

TagLexicon load_tag_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("tagger: cannot read " + path.string());
  // (word, tag) -> summed count
  std::map<std::pair<std::string, std::string>, double> counts;
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
      os << "tagger: " << path.string() << ":" << line_no << ": " << why;
      throw std::runtime_error(os.str());
    };
    if (cols.size() != 3) fail("expected 3 columns");
    std::string word = to_lower(trim(cols[0]));
    std::string tag(trim(cols[1]));
    if (word.empty()) fail("empty word");
    if (!penn_tags().count(tag)) fail("unknown tag '" + tag + "'");
    double count = 0;
    try {
      size_t pos = 0;
      count = std::stod(std::string(trim(cols[2])), &pos);
      if (pos != trim(cols[2]).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail("non-numeric count '" + std::string(trim(cols[2])) + "'");
    }
    if (count < 0) fail("negative count");
    counts[{word, tag}] += count;
  }

  TagLexicon lex;
  lex.suffix_rules = default_suffix_rules();
  std::map<std::string, double> totals;
  for (const auto& [key, c] : counts) totals[key.first] += c;
  for (const auto& [key, c] : counts) {
    double total = totals[key.first];
    double freq = total > 0 ? c / total : 0.0;
    lex.word_tags[key.first].emplace_back(key.second, freq);
  }
  for (auto& [word, tags] : lex.word_tags) {
    std::sort(tags.begin(), tags.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
  }
  return lex;
}

std::vector<Token> tag(const std::vector<SentToken>& tokens,
                       const TagLexicon& lex) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  int prev_sentence = -1;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const auto& st = tokens[i];
    bool sentence_initial = st.sentence_index != prev_sentence;
    prev_sentence = st.sentence_index;

    Token tok;
    tok.surface = st.surface;
    tok.lower = to_lower(st.surface);
    tok.sentence_index = st.sentence_index;
    tok.token_index = static_cast<int>(i);

    if (is_punct_token(st.surface)) {
      tok.tag = st.surface;
    } else if (looks_like_number(tok.lower)) {
      tok.tag = lex.number_tag;
    } else if (const std::string* best = lex.best_tag(tok.lower)) {
      tok.tag = *best;
    } else {
      tok.tag.clear();
      for (const auto& [suffix, rule_tag] : lex.suffix_rules) {
        if (tok.lower.size() > suffix.size() && ends_with(tok.lower, suffix)) {
          tok.tag = rule_tag;
          break;
        }
      }
      if (tok.tag.empty()) {
        bool capitalized = std::isupper(static_cast<unsigned char>(st.surface[0]));
        tok.tag = (capitalized && !sentence_initial) ? lex.proper_noun_tag
                                                     : lex.default_tag;
      }
    }

    // contextual patch rules
    if (!out.empty() && out.back().sentence_index == tok.sentence_index) {
      const Token& prev = out.back();
      auto is_copula = [](const Token& t) {
        return t.lower == "is" || t.lower == "are" || t.lower == "was" ||
               t.lower == "were";
      };
      // copula possibly separated by a short adverb run: "is not very good"
      bool after_copula = is_copula(prev);
      if (!after_copula && detail::starts_with(prev.tag, "RB")) {
        for (int back = 2; back <= 3; ++back) {
          if (out.size() < static_cast<size_t>(back)) break;
          const Token& t = out[out.size() - static_cast<size_t>(back)];
          if (t.sentence_index != tok.sentence_index) break;
          if (is_copula(t)) { after_copula = true; break; }
          if (!detail::starts_with(t.tag, "RB")) break;
        }
      }
      if (prev.tag == "DT" && detail::starts_with(tok.tag, "VB") &&
          lex.has_reading(tok.lower, "NN")) {
        tok.tag = "NN";
      } else if (after_copula && !detail::starts_with(tok.tag, "JJ") &&
                 lex.has_reading(tok.lower, "JJ")) {
        tok.tag = "JJ";
      } else if (prev.tag == "PRP" && !detail::starts_with(tok.tag, "VB")) {
        if (const std::string* vt = lex.best_tag_with_prefix(tok.lower, "VB"))
          tok.tag = *vt;
      }
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<Token> parse_pretagged(std::string_view line) {
  std::vector<Token> out;
  auto items = detail::split_ws(line);
  int sentence = 0;
  for (size_t i = 0; i < items.size(); ++i) {
    auto item = items[i];
    size_t slash = item.rfind('/');
    if (slash == std::string_view::npos || slash == item.size() - 1) {
      std::ostringstream os;
      os << "tagger: pretagged item " << i << " ('" << std::string(item)
         << "') has no /TAG suffix";
      throw std::runtime_error(os.str());
    }
    Token tok;
    tok.surface = std::string(item.substr(0, slash));
    tok.lower = to_lower(tok.surface);
    tok.tag = std::string(item.substr(slash + 1));
    tok.sentence_index = sentence;
    tok.token_index = static_cast<int>(i);
    bool terminator = tok.surface == "." || tok.surface == "!" ||
                      tok.surface == "?";
    out.push_back(std::move(tok));
    if (terminator) {
      bool at_end = i + 1 == items.size();
      bool capital_follows =
          !at_end && !items[i + 1].empty() &&
          std::isupper(static_cast<unsigned char>(items[i + 1][0]));
      if (at_end || capital_follows) ++sentence;
    }
  }
  return out;
}

std::string render_pretagged(const std::vector<Token>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i].surface;
    out += '/';
    out += tokens[i].tag;
  }
  return out;
}

}  // namespace sentorient
