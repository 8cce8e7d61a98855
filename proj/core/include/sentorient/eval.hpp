#ifndef SENTORIENT_EVAL_HPP
#define SENTORIENT_EVAL_HPP

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sentorient/classifier.hpp"
#include "sentorient/polarity.hpp"

namespace sentorient {

// Row = gold class, column = predicted class, both in the order
// Positive, Negative, Neutral.
struct ConfusionMatrix {
  static constexpr std::array<DocPolarity, 3> kClasses = {
      DocPolarity::Positive, DocPolarity::Negative, DocPolarity::Neutral};
  static constexpr size_t class_index(DocPolarity p) {
    return p == DocPolarity::Positive ? 0 : p == DocPolarity::Negative ? 1 : 2;
  }

  std::array<std::array<long, 3>, 3> cells{};
  long total = 0;

  long& at(DocPolarity gold, DocPolarity predicted) {
    return cells[class_index(gold)][class_index(predicted)];
  }
  long at(DocPolarity gold, DocPolarity predicted) const {
    return cells[class_index(gold)][class_index(predicted)];
  }
};

// Every verdict id must have a gold label; unknown ids are an error
// naming them, as are duplicate verdict ids.
ConfusionMatrix confusion(const std::vector<DocumentVerdict>& verdicts,
                          const std::map<std::string, DocPolarity>& gold);

struct ClassMetrics {
  std::optional<double> precision;  // nullopt = undefined (zero denominator)
  std::optional<double> recall;
};

struct EvalReport {
  std::array<ClassMetrics, 3> per_class;  // Positive, Negative, Neutral
  std::optional<double> macro_precision;  // mean over defined classes
  std::optional<double> macro_recall;
  std::optional<double> accuracy;
  ConfusionMatrix matrix;
};

EvalReport metrics(const ConfusionMatrix& m);

enum class ReportFormat { Text, Csv, Json };
std::optional<ReportFormat> parse_report_format(std::string_view name);

// Text reproduces the two-column Measures/Results table with macro values
// at 2 decimal places; csv/json carry the per-class detail.
std::string render_report(const EvalReport& report, ReportFormat format);

// One system in a comparison: either a computed report or a published
// (accuracy, precision, recall) triple with its source annotation.
struct SystemEntry {
  struct Published {
    double accuracy = 0;
    double precision = 0;
    double recall = 0;
    std::string source;
  };
  std::string name;
  std::optional<EvalReport> report;
  std::optional<Published> published;

  std::optional<double> accuracy() const;
  std::optional<double> precision() const;  // macro for computed reports
  std::optional<double> recall() const;
};

struct SystemComparison {
  std::vector<SystemEntry> systems;
};

// Requires at least two systems; one column per system, published triples
// marked with their source.
std::string compare(const SystemComparison& cmp, ReportFormat format);

// Grouped bar chart: one group per measure, one bar per system, y axis
// [0,1] with 0.1 gridlines, legend with system names. Byte-deterministic
// for identical input. Throws when no metric is defined.
std::string render_chart_svg(const SystemComparison& cmp);
std::string render_chart_svg(const EvalReport& report,
                             const std::string& name = "system");
void render_chart(const SystemComparison& cmp,
                  const std::filesystem::path& out_path);

// Gold labels TSV `id<TAB>label`.
std::map<std::string, DocPolarity> load_gold_labels(
    const std::filesystem::path& path);

}  // namespace sentorient

#endif
