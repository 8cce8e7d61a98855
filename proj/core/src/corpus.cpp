#include "sentorient/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "text_util.hpp"

namespace sentorient {

using detail::ends_with;
using detail::is_ascii_space;
using detail::split;
using detail::to_lower;
using detail::trim;

std::optional<CorpusFormat> parse_corpus_format(std::string_view name) {
  if (name == "dir" || name == "dir_of_txt") return CorpusFormat::DirOfTxt;
  if (name == "jsonl") return CorpusFormat::Jsonl;
  if (name == "tsv" || name == "tsv_labeled") return CorpusFormat::TsvLabeled;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// preprocess

namespace {

// Removes every complete <...> span. A '<' whose matching '>' comes after
// another '<' is kept as literal text.
std::string strip_tags_once(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      size_t close = s.find('>', i + 1);
      size_t open = s.find('<', i + 1);
      if (close != std::string::npos &&
          (open == std::string::npos || close < open)) {
        i = close + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Single left-to-right pass; unrecognized entities stay literal.
std::string decode_entities_once(const std::string& s) {
  static const std::pair<const char*, const char*> kNamed[] = {
      {"&amp;", "&"},   {"&lt;", "<"},    {"&gt;", ">"},
      {"&quot;", "\""}, {"&apos;", "'"},  {"&nbsp;", " "},
      {"&#39;", "'"},   {"&#039;", "'"},  {"&mdash;", "-"},
      {"&ndash;", "-"}, {"&hellip;", "..."},
  };
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '&') {
      bool replaced = false;
      for (const auto& [name, repl] : kNamed) {
        std::string_view n(name);
        if (s.compare(i, n.size(), n) == 0) {
          out += repl;
          i += n.size();
          replaced = true;
          break;
        }
      }
      if (replaced) continue;
      // numeric: &#123; or &#x1F;
      size_t semi = s.find(';', i + 1);
      if (semi != std::string::npos && semi - i <= 10 && i + 2 < semi &&
          s[i + 1] == '#') {
        std::string digits = s.substr(i + 2, semi - i - 2);
        uint32_t cp = 0;
        bool ok = !digits.empty();
        if (digits[0] == 'x' || digits[0] == 'X') {
          ok = digits.size() > 1;
          for (size_t k = 1; ok && k < digits.size(); ++k) {
            char c = digits[k];
            int v = (c >= '0' && c <= '9')   ? c - '0'
                    : (c >= 'a' && c <= 'f') ? c - 'a' + 10
                    : (c >= 'A' && c <= 'F') ? c - 'A' + 10
                                             : -1;
            if (v < 0 || cp > 0x10FFFF) ok = false;
            else cp = cp * 16 + static_cast<uint32_t>(v);
          }
        } else {
          for (char c : digits) {
            if (c < '0' || c > '9' || cp > 0x10FFFF) { ok = false; break; }
            cp = cp * 10 + static_cast<uint32_t>(c - '0');
          }
        }
        if (ok && cp > 0 && cp <= 0x10FFFF) {
          append_utf8(out, cp);
          i = semi + 1;
          continue;
        }
      }
    }
    out += s[i++];
  }
  return out;
}

// Maps typographic punctuation to ASCII, turns exotic spaces into plain
// spaces and drops control and zero-width characters. ASCII passes through,
// so the mapping is idempotent.
std::string canonicalize_unicode(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80) {
      if (b < 0x20 && b != '\t' && b != '\n' && b != '\r') {
        ++i;  // control character
        continue;
      }
      out += static_cast<char>(b);
      ++i;
      continue;
    }
    // decode one UTF-8 sequence; invalid bytes are dropped
    uint32_t cp = 0;
    int len = 0;
    if ((b & 0xE0) == 0xC0) { cp = b & 0x1F; len = 2; }
    else if ((b & 0xF0) == 0xE0) { cp = b & 0x0F; len = 3; }
    else if ((b & 0xF8) == 0xF0) { cp = b & 0x07; len = 4; }
    else { ++i; continue; }
    if (i + static_cast<size_t>(len) > s.size()) { ++i; continue; }
    bool valid = true;
    for (int k = 1; k < len; ++k) {
      unsigned char c = static_cast<unsigned char>(s[i + k]);
      if ((c & 0xC0) != 0x80) { valid = false; break; }
      cp = (cp << 6) | (c & 0x3F);
    }
    if (!valid) { ++i; continue; }
    i += static_cast<size_t>(len);
    switch (cp) {
      case 0x00A0: case 0x2002: case 0x2003: case 0x2009:
        out += ' '; break;
      case 0x2018: case 0x2019: case 0x02BC:
        out += '\''; break;
      case 0x201C: case 0x201D:
        out += '"'; break;
      case 0x2013: case 0x2014: case 0x2212:
        out += '-'; break;
      case 0x2026:
        out += "..."; break;
      case 0x200B: case 0x200C: case 0x200D: case 0xFEFF:
        break;  // zero width
      default:
        append_utf8(out, cp);
    }
  }
  return out;
}

std::string collapse_whitespace(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out += ' ';
    in_space = false;
    out += c;
  }
  return out;
}

}  // namespace

std::string preprocess(std::string_view text) {
  std::string cur(text);
  // Entity decoding can uncover markup and vice versa; iterate to a fixed
  // point (every productive pass strictly shrinks the string).
  for (;;) {
    std::string next = strip_tags_once(decode_entities_once(cur));
    if (next == cur) break;
    cur = std::move(next);
  }
  return collapse_whitespace(canonicalize_unicode(cur));
}

// ---------------------------------------------------------------------------
// tokenize

namespace {

bool is_word_byte(char c) {
  unsigned char b = static_cast<unsigned char>(c);
  return std::isalnum(b) || c == '_' || b >= 0x80;
}

bool is_contraction_suffix(std::string_view piece) {
  std::string p = to_lower(piece);
  return p == "'s" || p == "'t" || p == "'m" || p == "'d" || p == "'re" ||
         p == "'ve" || p == "'ll";
}

// Splits one run of word characters and apostrophes into surface tokens.
void split_word_run(std::string_view run, std::vector<std::string>& out) {
  if (run.find('\'') == std::string_view::npos) {
    out.emplace_back(run);
    return;
  }
  std::string lower = to_lower(run);
  if (run.size() > 3 && ends_with(lower, "n't")) {
    split_word_run(run.substr(0, run.size() - 3), out);
    out.emplace_back(run.substr(run.size() - 3));
    return;
  }
  if (lower == "n't") {
    out.emplace_back(run);
    return;
  }
  // Cut at apostrophes; a piece forming a known contraction suffix stays
  // attached to its apostrophe, any other apostrophe stands alone.
  size_t i = 0;
  size_t start = 0;
  while (i <= run.size()) {
    if (i == run.size() || run[i] == '\'') {
      if (i > start) out.emplace_back(run.substr(start, i - start));
      if (i == run.size()) break;
      size_t j = i + 1;
      while (j < run.size() && run[j] != '\'') ++j;
      std::string_view piece = run.substr(i, j - i);
      if (is_contraction_suffix(piece)) {
        out.emplace_back(piece);
      } else {
        out.emplace_back("'");
        if (piece.size() > 1) out.emplace_back(piece.substr(1));
      }
      i = j;
      start = j;
      continue;
    }
    ++i;
  }
}

bool is_sentence_terminator(std::string_view tok) {
  return tok == "." || tok == "!" || tok == "?";
}

}  // namespace

std::vector<SentToken> tokenize(std::string_view text) {
  std::vector<SentToken> out;
  int sentence = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (is_ascii_space(c)) {
      ++i;
      continue;
    }
    if (is_word_byte(c) || c == '\'') {
      size_t start = i;
      while (i < text.size() && (is_word_byte(text[i]) || text[i] == '\''))
        ++i;
      std::vector<std::string> pieces;
      split_word_run(text.substr(start, i - start), pieces);
      for (auto& p : pieces) out.push_back({std::move(p), sentence});
      continue;
    }
    // single punctuation character
    std::string tok(1, c);
    ++i;
    out.push_back({tok, sentence});
    if (is_sentence_terminator(tok)) {
      size_t j = i;
      while (j < text.size() && is_ascii_space(text[j])) ++j;
      bool at_end = j >= text.size();
      bool capital_follows =
          j > i && j < text.size() && std::isupper(static_cast<unsigned char>(text[j]));
      if (at_end || capital_follows) ++sentence;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// load_corpus

namespace {

[[noreturn]] void corpus_error(const std::string& msg) {
  throw std::runtime_error("corpus: " + msg);
}

void handle_malformed(const std::string& where, size_t line_no,
                      const std::string& why, const CorpusOptions& opts) {
  std::ostringstream os;
  os << where << ":" << line_no << ": " << why;
  if (opts.strict) corpus_error(os.str());
  if (opts.warnings) opts.warnings->push_back(os.str());
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) corpus_error("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<RawDocument> load_dir_of_txt(const std::filesystem::path& dir,
                                         const CorpusOptions& opts) {
  if (!std::filesystem::is_directory(dir))
    corpus_error(dir.string() + " is not a directory");
  std::vector<RawDocument> docs;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto& p = entry.path();
    if (p.extension() != opts.extension) continue;
    docs.push_back({p.stem().string(), read_file(p), std::nullopt});
  }
  return docs;
}

std::vector<RawDocument> load_jsonl(const std::filesystem::path& file,
                                    const CorpusOptions& opts) {
  std::ifstream in(file);
  if (!in) corpus_error("cannot read " + file.string());
  std::vector<RawDocument> docs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
        !j.contains("text") || !j["id"].is_string() ||
        !j["text"].is_string()) {
      handle_malformed(file.string(), line_no,
                       "expected object with string fields 'id' and 'text'",
                       opts);
      continue;
    }
    RawDocument doc{j["id"].get<std::string>(), j["text"].get<std::string>(),
                    std::nullopt};
    if (j.contains("label")) {
      if (!j["label"].is_string()) {
        handle_malformed(file.string(), line_no, "'label' must be a string",
                         opts);
        continue;
      }
      auto pol = parse_doc_polarity(j["label"].get<std::string>());
      if (!pol) {
        handle_malformed(file.string(), line_no,
                         "unknown label '" + j["label"].get<std::string>() +
                             "'",
                         opts);
        continue;
      }
      doc.gold_label = pol;
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<RawDocument> load_tsv(const std::filesystem::path& file,
                                  const CorpusOptions& opts) {
  std::ifstream in(file);
  if (!in) corpus_error("cannot read " + file.string());
  std::vector<RawDocument> docs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() == 2) {
      docs.push_back({std::string(cols[0]), std::string(cols[1]), std::nullopt});
    } else if (cols.size() == 3) {
      auto pol = parse_doc_polarity(cols[1]);
      if (!pol) {
        handle_malformed(file.string(), line_no,
                         "unknown label '" + std::string(cols[1]) + "'", opts);
        continue;
      }
      docs.push_back({std::string(cols[0]), std::string(cols[2]), pol});
    } else {
      handle_malformed(file.string(), line_no, "expected 2 or 3 columns",
                       opts);
    }
  }
  return docs;
}

}  // namespace

std::vector<RawDocument> load_corpus(const std::filesystem::path& path,
                                     CorpusFormat format,
                                     const CorpusOptions& opts) {
  if (!std::filesystem::exists(path))
    corpus_error(path.string() + " does not exist");
  std::vector<RawDocument> docs;
  switch (format) {
    case CorpusFormat::DirOfTxt: docs = load_dir_of_txt(path, opts); break;
    case CorpusFormat::Jsonl: docs = load_jsonl(path, opts); break;
    case CorpusFormat::TsvLabeled: docs = load_tsv(path, opts); break;
  }
  std::sort(docs.begin(), docs.end(),
            [](const RawDocument& a, const RawDocument& b) { return a.id < b.id; });
  for (size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].id.empty()) corpus_error("empty document id");
    if (i + 1 < docs.size() && docs[i].id == docs[i + 1].id)
      corpus_error("duplicate document id '" + docs[i].id + "'");
  }
  return docs;
}

}  // namespace sentorient
