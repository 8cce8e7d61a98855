#include "sentorient/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "text_util.hpp"

namespace sentorient {

using detail::split;
using detail::to_lower;
using detail::trim;

namespace {

constexpr std::array<std::string_view, 3> kClassNames = {"positive",
                                                         "negative",
                                                         "neutral"};
constexpr std::array<std::string_view, 3> kMeasureNames = {"Accuracy",
                                                           "Precision",
                                                           "Recall"};

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v, int decimals) {
  return v ? fmt(*v, decimals) : std::string("n/a");
}

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

ConfusionMatrix confusion(const std::vector<DocumentVerdict>& verdicts,
                          const std::map<std::string, DocPolarity>& gold) {
  std::set<std::string> seen;
  std::vector<std::string> missing;
  ConfusionMatrix m;
  for (const auto& v : verdicts) {
    if (!seen.insert(v.doc_id).second)
      throw std::runtime_error("eval: duplicate verdict id '" + v.doc_id + "'");
    auto it = gold.find(v.doc_id);
    if (it == gold.end()) {
      missing.push_back(v.doc_id);
      continue;
    }
    ++m.at(it->second, v.polarity);
    ++m.total;
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    std::string msg = "eval: no gold label for:";
    for (const auto& id : missing) msg += " " + id;
    throw std::runtime_error(msg);
  }
  return m;
}

EvalReport metrics(const ConfusionMatrix& m) {
  EvalReport r;
  r.matrix = m;
  if (m.total == 0) return r;  // everything undefined

  long diag = 0;
  for (size_t c = 0; c < 3; ++c) {
    diag += m.cells[c][c];
    long col = 0, row = 0;
    for (size_t k = 0; k < 3; ++k) {
      col += m.cells[k][c];
      row += m.cells[c][k];
    }
    if (col > 0)
      r.per_class[c].precision = static_cast<double>(m.cells[c][c]) / col;
    if (row > 0)
      r.per_class[c].recall = static_cast<double>(m.cells[c][c]) / row;
  }
  r.accuracy = static_cast<double>(diag) / m.total;

  double psum = 0, rsum = 0;
  int pn = 0, rn = 0;
  for (const auto& cm : r.per_class) {
    if (cm.precision) { psum += *cm.precision; ++pn; }
    if (cm.recall) { rsum += *cm.recall; ++rn; }
  }
  if (pn) r.macro_precision = psum / pn;
  if (rn) r.macro_recall = rsum / rn;
  return r;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  return std::nullopt;
}

namespace {

std::array<std::optional<double>, 3> measure_values(const EvalReport& r) {
  return {r.accuracy, r.macro_precision, r.macro_recall};
}

nlohmann::json report_to_json(const EvalReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json per_class = nlohmann::json::object();
  for (size_t c = 0; c < 3; ++c) {
    per_class[std::string(kClassNames[c])] = {
        {"precision", opt(r.per_class[c].precision)},
        {"recall", opt(r.per_class[c].recall)},
    };
  }
  nlohmann::json rows = nlohmann::json::array();
  for (size_t g = 0; g < 3; ++g) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t p = 0; p < 3; ++p) row.push_back(r.matrix.cells[g][p]);
    rows.push_back(row);
  }
  return {
      {"accuracy", opt(r.accuracy)},
      {"macro_precision", opt(r.macro_precision)},
      {"macro_recall", opt(r.macro_recall)},
      {"per_class", per_class},
      {"matrix", {{"classes", {"positive", "negative", "neutral"}},
                  {"rows", rows},
                  {"total", r.matrix.total}}},
  };
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::Text) {
    const auto values = measure_values(report);
    std::ostringstream os;
    os << pad("Measures", 12) << "Results\n";
    for (size_t i = 0; i < 3; ++i)
      os << pad(std::string(kMeasureNames[i]), 12) << fmt_opt(values[i], 2)
         << "\n";
    return os.str();
  }
  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "measure,class,value\n";
    os << "accuracy,," << fmt_opt(report.accuracy, 6) << "\n";
    for (size_t c = 0; c < 3; ++c)
      os << "precision," << kClassNames[c] << ","
         << fmt_opt(report.per_class[c].precision, 6) << "\n";
    os << "precision,macro," << fmt_opt(report.macro_precision, 6) << "\n";
    for (size_t c = 0; c < 3; ++c)
      os << "recall," << kClassNames[c] << ","
         << fmt_opt(report.per_class[c].recall, 6) << "\n";
    os << "recall,macro," << fmt_opt(report.macro_recall, 6) << "\n";
    return os.str();
  }
  return report_to_json(report).dump(2) + "\n";
}

std::optional<double> SystemEntry::accuracy() const {
  if (published) return published->accuracy;
  if (report) return report->accuracy;
  return std::nullopt;
}

std::optional<double> SystemEntry::precision() const {
  if (published) return published->precision;
  if (report) return report->macro_precision;
  return std::nullopt;
}

std::optional<double> SystemEntry::recall() const {
  if (published) return published->recall;
  if (report) return report->macro_recall;
  return std::nullopt;
}

std::string compare(const SystemComparison& cmp, ReportFormat format) {
  if (cmp.systems.size() < 2)
    throw std::runtime_error("eval: comparison needs at least two systems");

  auto column_name = [](const SystemEntry& s) {
    return s.published ? s.name + "*" : s.name;
  };
  auto value_of = [](const SystemEntry& s, size_t measure) {
    switch (measure) {
      case 0: return s.accuracy();
      case 1: return s.precision();
      default: return s.recall();
    }
  };

  if (format == ReportFormat::Text) {
    std::ostringstream os;
    os << pad("Measures", 12);
    for (size_t k = 0; k < cmp.systems.size(); ++k) {
      const auto& s = cmp.systems[k];
      bool last = k + 1 == cmp.systems.size();
      size_t width = std::max<size_t>(column_name(s).size() + 3, 8);
      os << (last ? column_name(s) : pad(column_name(s), width));
    }
    os << "\n";
    for (size_t i = 0; i < 3; ++i) {
      os << pad(std::string(kMeasureNames[i]), 12);
      for (size_t k = 0; k < cmp.systems.size(); ++k) {
        const auto& s = cmp.systems[k];
        bool last = k + 1 == cmp.systems.size();
        size_t width = std::max<size_t>(column_name(s).size() + 3, 8);
        std::string cell = fmt_opt(value_of(s, i), 2);
        os << (last ? cell : pad(cell, width));
      }
      os << "\n";
    }
    bool any_published = false;
    for (const auto& s : cmp.systems) any_published |= s.published.has_value();
    if (any_published) {
      os << "\n";
      for (const auto& s : cmp.systems)
        if (s.published)
          os << "* " << s.name << ": published values ("
             << s.published->source << ")\n";
    }
    return os.str();
  }
  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "measure,system,value\n";
    static constexpr std::array<std::string_view, 3> keys = {
        "accuracy", "precision", "recall"};
    for (size_t i = 0; i < 3; ++i)
      for (const auto& s : cmp.systems)
        os << keys[i] << "," << s.name << "," << fmt_opt(value_of(s, i), 6)
           << "\n";
    return os.str();
  }
  nlohmann::json systems = nlohmann::json::array();
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  for (const auto& s : cmp.systems) {
    nlohmann::json j = {{"name", s.name},
                        {"accuracy", opt(s.accuracy())},
                        {"precision", opt(s.precision())},
                        {"recall", opt(s.recall())}};
    if (s.published) j["source"] = s.published->source;
    systems.push_back(j);
  }
  return nlohmann::json{{"systems", systems}}.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// SVG chart

namespace {

constexpr double kBarWidth = 34;
constexpr double kBarGap = 6;
constexpr double kGroupGap = 40;
constexpr double kPlotTop = 40;
constexpr double kPlotBottom = 300;
constexpr double kPlotLeft = 60;
constexpr double kLegendWidth = 170;

const char* bar_color(size_t system_index) {
  static const char* palette[] = {"#4472c4", "#ed7d31", "#a5a5a5",
                                  "#ffc000", "#5b9bd5", "#70ad47"};
  return palette[system_index % 6];
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_chart_svg(const SystemComparison& cmp) {
  const size_t n_systems = cmp.systems.size();
  if (n_systems == 0)
    throw std::runtime_error("eval: nothing to plot");
  size_t defined = 0;
  for (const auto& s : cmp.systems) {
    if (s.accuracy()) ++defined;
    if (s.precision()) ++defined;
    if (s.recall()) ++defined;
  }
  if (defined == 0) throw std::runtime_error("eval: no defined metric to plot");

  const double group_width =
      static_cast<double>(n_systems) * kBarWidth +
      static_cast<double>(n_systems - 1) * kBarGap;
  const double width =
      kPlotLeft + 3 * group_width + 2 * kGroupGap + kGroupGap / 2 +
      kLegendWidth;
  const double height = kPlotBottom + 50;
  const double scale = kPlotBottom - kPlotTop;

  auto y_of = [&](double v) { return kPlotBottom - v * scale; };
  auto num = [](double v) { return fmt(v, 2); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << fmt(width, 0) << "\" height=\"" << fmt(height, 0) << "\">\n";
  os << "<rect width=\"" << fmt(width, 0) << "\" height=\"" << fmt(height, 0)
     << "\" fill=\"white\"/>\n";

  // gridlines every 0.1
  for (int i = 0; i <= 10; ++i) {
    double v = i / 10.0;
    double y = y_of(v);
    os << "<line x1=\"" << fmt(kPlotLeft, 2) << "\" y1=\"" << fmt(y, 2)
       << "\" x2=\"" << fmt(width - kLegendWidth, 2) << "\" y2=\"" << fmt(y, 2)
       << "\" stroke=\"" << (i == 0 ? "#333333" : "#dddddd")
       << "\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fmt(kPlotLeft - 8, 2) << "\" y=\"" << fmt(y + 4, 2)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
       << fmt(v, 1) << "</text>\n";
  }

  // bars, one group per measure
  for (size_t measure = 0; measure < 3; ++measure) {
    double group_x =
        kPlotLeft + kGroupGap / 2 +
        static_cast<double>(measure) * (group_width + kGroupGap);
    for (size_t s = 0; s < n_systems; ++s) {
      const SystemEntry& entry = cmp.systems[s];
      std::optional<double> v = measure == 0   ? entry.accuracy()
                                : measure == 1 ? entry.precision()
                                               : entry.recall();
      if (!v) continue;
      double x = group_x + static_cast<double>(s) * (kBarWidth + kBarGap);
      double y = y_of(*v);
      os << "<rect class=\"bar\" x=\"" << fmt(x, 2) << "\" y=\"" << fmt(y, 2)
         << "\" width=\"" << fmt(kBarWidth, 2) << "\" height=\""
         << fmt(kPlotBottom - y, 2) << "\" fill=\"" << bar_color(s)
         << "\"/>\n";
      os << "<text x=\"" << fmt(x + kBarWidth / 2, 2) << "\" y=\""
         << fmt(y - 4, 2)
         << "\" font-family=\"sans-serif\" font-size=\"10\" "
            "text-anchor=\"middle\">"
         << num(*v) << "</text>\n";
    }
    os << "<text x=\"" << fmt(group_x + group_width / 2, 2) << "\" y=\""
       << fmt(kPlotBottom + 20, 2)
       << "\" font-family=\"sans-serif\" font-size=\"12\" "
          "text-anchor=\"middle\">"
       << kMeasureNames[measure] << "</text>\n";
  }

  // legend
  double lx = width - kLegendWidth + 10;
  for (size_t s = 0; s < n_systems; ++s) {
    double ly = kPlotTop + static_cast<double>(s) * 22;
    os << "<rect x=\"" << fmt(lx, 2) << "\" y=\"" << fmt(ly, 2)
       << "\" width=\"14\" height=\"14\" fill=\"" << bar_color(s) << "\"/>\n";
    os << "<text x=\"" << fmt(lx + 20, 2) << "\" y=\"" << fmt(ly + 11, 2)
       << "\" font-family=\"sans-serif\" font-size=\"12\">"
       << xml_escape(cmp.systems[s].name) << "</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

std::string render_chart_svg(const EvalReport& report,
                             const std::string& name) {
  SystemComparison cmp;
  SystemEntry entry;
  entry.name = name;
  entry.report = report;
  cmp.systems.push_back(std::move(entry));
  return render_chart_svg(cmp);
}

void render_chart(const SystemComparison& cmp,
                  const std::filesystem::path& out_path) {
  std::string svg = render_chart_svg(cmp);
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw std::runtime_error("eval: cannot write " + out_path.string());
  out << svg;
  if (!out)
    throw std::runtime_error("eval: failed writing " + out_path.string());
}

std::map<std::string, DocPolarity> load_gold_labels(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("eval: cannot read " + path.string());
  std::map<std::string, DocPolarity> gold;
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
      os << "eval: " << path.string() << ":" << line_no << ": " << why;
      throw std::runtime_error(os.str());
    };
    if (cols.size() != 2) fail("expected id<TAB>label");
    auto pol = parse_doc_polarity(trim(cols[1]));
    if (!pol) fail("unknown label '" + std::string(trim(cols[1])) + "'");
    std::string id(trim(cols[0]));
    if (id.empty()) fail("empty id");
    if (gold.count(id)) fail("duplicate id '" + id + "'");
    gold[id] = *pol;
  }
  return gold;
}

}  // namespace sentorient
