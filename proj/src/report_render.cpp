#include "fairicl/report_render.hpp"

#include <cstdio>

#include "fairicl/errors.hpp"
#include "fairicl/util.hpp"

namespace fairicl {

namespace {

constexpr const char* kInfinity = "\xE2\x88\x9E";   // infinity sign
constexpr const char* kUndefined = "\xE2\x80\x94";  // em dash
constexpr const char* kUp = "\xE2\x86\x91";         // upwards arrow
constexpr const char* kDown = "\xE2\x86\x93";       // downwards arrow

constexpr std::size_t kLabelWidth = 31;
constexpr std::size_t kValueWidth = 12;
constexpr const char* kGap = "  ";

constexpr std::array<std::string_view, 8> kColumnHeads = {
    "Accuracy", "F1", "DI'", "TPR'", "FPR'", "PPV'", "FOR'", "Acc'"};

std::string two_dp(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  std::size_t w = display_width(out);
  while (w < width) {
    out.push_back(' ');
    ++w;
  }
  return out;
}

void rtrim_line(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

// The ordinary value cell. Degenerate rows pass has_data = false.
std::string plain_cell(const MetricValue& v, bool has_data) {
  if (!has_data) return "-";
  return format_metric(v);
}

// Average-row cell: value, then arrow and |delta| against the baseline.
// No arrow when either side is undefined or there is no baseline.
std::string delta_cell(const MetricValue& v, const std::optional<MetricValue>& baseline,
                       bool higher_is_better) {
  std::string out = format_metric(v);
  if (!baseline || v.is_undefined() || baseline->is_undefined()) return out;

  bool improved;
  if (v.is_infinite() && baseline->is_infinite()) {
    improved = true;  // no change
  } else if (v.is_infinite()) {
    improved = higher_is_better;
  } else if (baseline->is_infinite()) {
    improved = !higher_is_better;
  } else if (v.value() == baseline->value()) {
    improved = true;  // no change counts as the positive direction
  } else if (higher_is_better) {
    improved = v.value() > baseline->value();
  } else {
    improved = v.value() < baseline->value();
  }

  std::string delta = v.is_finite() && baseline->is_finite()
                          ? two_dp(std::fabs(v.value() - baseline->value()))
                          : std::string(kUndefined);
  out += " ";
  out += improved ? kUp : kDown;
  out += " ";
  out += delta;
  return out;
}

std::array<MetricValue, 8> row_values(const FairnessReport& r) {
  return {MetricValue::finite(r.performance.macro_accuracy),
          MetricValue::finite(r.performance.macro_f1),
          r.deviations.di,
          r.deviations.tpr,
          r.deviations.fpr,
          r.deviations.ppv,
          r.deviations.for_,
          r.deviations.acc};
}

std::array<MetricValue, 8> average_values(const AggregateRow& a) {
  return {a.macro_accuracy, a.macro_f1,        a.deviations.di,  a.deviations.tpr,
          a.deviations.fpr, a.deviations.ppv, a.deviations.for_, a.deviations.acc};
}

const FairnessReport* find_baseline(const ReportSection& s) {
  for (const FairnessReport& r : s.rows) {
    if (r.definition == "No Fairness") return &r;
  }
  return nullptr;
}

std::string tsv_metric(const MetricValue& v) {
  if (v.is_infinite()) return "inf";
  if (v.is_undefined()) return "undef";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v.value());
  return buf;
}

}  // namespace

std::string format_metric(const MetricValue& v) {
  if (v.is_infinite()) return kInfinity;
  if (v.is_undefined()) return kUndefined;
  return two_dp(v.value());
}

std::string render_text(const std::vector<ReportSection>& sections) {
  std::string out;
  bool first_section = true;
  for (const ReportSection& s : sections) {
    if (!first_section) out += "\n";
    first_section = false;

    out += "=== model=" + s.model + " shot=" + s.shot + " rules=" + s.level + " ===\n\n";

    std::string header = pad("Definition", kLabelWidth);
    for (std::string_view h : kColumnHeads) {
      header += kGap;
      header += pad(h, kValueWidth);
    }
    rtrim_line(header);
    out += header + "\n";

    std::string rule(kLabelWidth, '-');
    for (std::size_t c = 0; c < kColumnHeads.size(); ++c) {
      rule += kGap;
      rule += std::string(kValueWidth, '-');
    }
    out += rule + "\n";

    for (const FairnessReport& r : s.rows) {
      bool has_data = r.parsed_count > 0;
      std::string line = pad(r.definition, kLabelWidth);
      for (const MetricValue& v : row_values(r)) {
        line += kGap;
        line += pad(plain_cell(v, has_data), kValueWidth);
      }
      rtrim_line(line);
      out += line + "\n";
    }

    if (s.average) {
      const FairnessReport* base = find_baseline(s);
      std::array<std::optional<MetricValue>, 8> base_values{};
      if (base != nullptr && base->parsed_count > 0) {
        auto bv = row_values(*base);
        for (std::size_t i = 0; i < bv.size(); ++i) base_values[i] = bv[i];
      }
      auto avg = average_values(*s.average);
      std::string line = pad("Average (8 definitions)", kLabelWidth);
      for (std::size_t i = 0; i < avg.size(); ++i) {
        bool higher_is_better = i < 2;  // performance columns
        line += kGap;
        line += pad(delta_cell(avg[i], base_values[i], higher_is_better), kValueWidth);
      }
      rtrim_line(line);
      out += line + "\n";

      auto avg_dev = s.average->deviations;
      const std::array<std::pair<std::string_view, const MetricValue*>, 6> checks = {{
          {"DI'", &avg_dev.di},
          {"TPR'", &avg_dev.tpr},
          {"FPR'", &avg_dev.fpr},
          {"PPV'", &avg_dev.ppv},
          {"FOR'", &avg_dev.for_},
          {"Acc'", &avg_dev.acc},
      }};
      std::string verdicts;
      for (const auto& [name, value] : checks) {
        if (!verdicts.empty()) verdicts += ", ";
        verdicts += std::string(name) + " " + (eighty_percent_pass(*value) ? "pass" : "fail");
      }
      out += "80% rule (average): " + verdicts + "\n";
    }
  }
  return out;
}

std::string render_tsv(const std::vector<ReportSection>& sections) {
  std::string out =
      "model\tshot\trules\tdefinition\t"
      "macro_accuracy\tmacro_f1\t"
      "di_ratio\ttpr_ratio\tfpr_ratio\tppv_ratio\tfor_ratio\tacc_ratio\t"
      "di_dev\ttpr_dev\tfpr_dev\tppv_dev\tfor_dev\tacc_dev\t"
      "di_80\ttpr_80\tfpr_80\tppv_80\tfor_80\tacc_80\t"
      "parsed_count\trefusal_count\t"
      "f_tp\tf_fp\tf_tn\tf_fn\tm_tp\tm_fp\tm_tn\tm_fn\n";

  auto flag = [](bool b) { return b ? "true" : "false"; };

  for (const ReportSection& s : sections) {
    for (const FairnessReport& r : s.rows) {
      out += s.model + "\t" + s.shot + "\t" + s.level + "\t" + r.definition + "\t";
      if (r.parsed_count > 0) {
        out += tsv_metric(MetricValue::finite(r.performance.macro_accuracy)) + "\t";
        out += tsv_metric(MetricValue::finite(r.performance.macro_f1)) + "\t";
      } else {
        out += "-\t-\t";
      }
      for (const MetricValue* v :
           {&r.ratios.di, &r.ratios.tpr, &r.ratios.fpr, &r.ratios.ppv, &r.ratios.for_,
            &r.ratios.acc, &r.deviations.di, &r.deviations.tpr, &r.deviations.fpr,
            &r.deviations.ppv, &r.deviations.for_, &r.deviations.acc}) {
        out += r.parsed_count > 0 ? tsv_metric(*v) : std::string("-");
        out += "\t";
      }
      for (bool b : {r.eighty_percent.di, r.eighty_percent.tpr, r.eighty_percent.fpr,
                     r.eighty_percent.ppv, r.eighty_percent.for_, r.eighty_percent.acc}) {
        out += std::string(flag(b)) + "\t";
      }
      out += std::to_string(r.parsed_count) + "\t" + std::to_string(r.refusal_count) + "\t";
      out += std::to_string(r.female.tp) + "\t" + std::to_string(r.female.fp) + "\t" +
             std::to_string(r.female.tn) + "\t" + std::to_string(r.female.fn) + "\t" +
             std::to_string(r.male.tp) + "\t" + std::to_string(r.male.fp) + "\t" +
             std::to_string(r.male.tn) + "\t" + std::to_string(r.male.fn) + "\n";
    }
    if (s.average) {
      const AggregateRow& a = *s.average;
      out += s.model + "\t" + s.shot + "\t" + s.level + "\tAverage\t";
      out += tsv_metric(a.macro_accuracy) + "\t" + tsv_metric(a.macro_f1) + "\t";
      // Average rows have no raw-ratio columns.
      for (int i = 0; i < 6; ++i) out += "-\t";
      for (const MetricValue* v :
           {&a.deviations.di, &a.deviations.tpr, &a.deviations.fpr, &a.deviations.ppv,
            &a.deviations.for_, &a.deviations.acc}) {
        out += tsv_metric(*v) + "\t";
      }
      for (const MetricValue* v :
           {&a.deviations.di, &a.deviations.tpr, &a.deviations.fpr, &a.deviations.ppv,
            &a.deviations.for_, &a.deviations.acc}) {
        out += std::string(flag(eighty_percent_pass(*v))) + "\t";
      }
      out += "-\t-\t-\t-\t-\t-\t-\t-\t-\t-\n";
    }
  }
  return out;
}

}  // namespace fairicl
