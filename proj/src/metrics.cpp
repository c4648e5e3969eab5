#include "fairicl/metrics.hpp"

#include "fairicl/errors.hpp"

namespace fairicl {

std::pair<GroupConfusion, GroupConfusion> group_confusion(
    const std::vector<IncomeLabel>& predictions, const std::vector<IncomeLabel>& golds,
    const std::vector<Group>& groups) {
  if (predictions.size() != golds.size() || golds.size() != groups.size()) {
    throw AlignmentError("prediction/gold/group sequences have unequal lengths: " +
                         std::to_string(predictions.size()) + "/" +
                         std::to_string(golds.size()) + "/" +
                         std::to_string(groups.size()));
  }
  GroupConfusion female;
  GroupConfusion male;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    GroupConfusion& c = groups[i] == Group::Unprivileged ? female : male;
    bool pred_pos = predictions[i] == IncomeLabel::GT50K;
    bool gold_pos = golds[i] == IncomeLabel::GT50K;
    if (pred_pos && gold_pos) ++c.tp;
    else if (pred_pos && !gold_pos) ++c.fp;
    else if (!pred_pos && gold_pos) ++c.fn;
    else ++c.tn;
  }
  return {female, male};
}

RatioVector fairness_ratios(const GroupConfusion& f, const GroupConfusion& m) {
  auto r = [](std::int64_t num, std::int64_t den) {
    return MetricValue::rate(static_cast<double>(num), static_cast<double>(den));
  };
  RatioVector out;
  out.di = MetricValue::ratio_of(r(f.tp + f.fp, f.n()), r(m.tp + m.fp, m.n()));
  out.tpr = MetricValue::ratio_of(r(f.tp, f.tp + f.fn), r(m.tp, m.tp + m.fn));
  out.fpr = MetricValue::ratio_of(r(f.fp, f.fp + f.tn), r(m.fp, m.fp + m.tn));
  out.ppv = MetricValue::ratio_of(r(f.tp, f.tp + f.fp), r(m.tp, m.tp + m.fp));
  out.for_ = MetricValue::ratio_of(r(f.fn, f.tn + f.fn), r(m.fn, m.tn + m.fn));
  out.acc = MetricValue::ratio_of(r(f.tp + f.tn, f.n()), r(m.tp + m.tn, m.n()));
  return out;
}

DeviationVector deviations(const RatioVector& r) {
  DeviationVector out;
  out.di = r.di.deviation();
  out.tpr = r.tpr.deviation();
  out.fpr = r.fpr.deviation();
  out.ppv = r.ppv.deviation();
  out.for_ = r.for_.deviation();
  out.acc = r.acc.deviation();
  return out;
}

PerformanceScores performance(const std::vector<IncomeLabel>& predictions,
                              const std::vector<IncomeLabel>& golds) {
  if (predictions.size() != golds.size()) {
    throw AlignmentError("prediction/gold sequences have unequal lengths");
  }
  if (predictions.empty()) {
    throw Error("performance is undefined on an empty prediction set");
  }
  // Index 0 = LE50K, 1 = GT50K.
  std::array<std::int64_t, 2> gold_n{};
  std::array<std::int64_t, 2> pred_n{};
  std::array<std::int64_t, 2> correct{};
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    int g = golds[i] == IncomeLabel::GT50K ? 1 : 0;
    int p = predictions[i] == IncomeLabel::GT50K ? 1 : 0;
    ++gold_n[g];
    ++pred_n[p];
    if (g == p) ++correct[g];
  }

  // Balanced accuracy: mean recall over classes present in the golds.
  double recall_sum = 0.0;
  int present = 0;
  for (int c = 0; c < 2; ++c) {
    if (gold_n[c] > 0) {
      recall_sum += static_cast<double>(correct[c]) / static_cast<double>(gold_n[c]);
      ++present;
    }
  }

  // Macro F1 over both classes; absent precision or recall counts as 0.
  double f1_sum = 0.0;
  for (int c = 0; c < 2; ++c) {
    double precision = pred_n[c] > 0
                           ? static_cast<double>(correct[c]) / static_cast<double>(pred_n[c])
                           : 0.0;
    double recall = gold_n[c] > 0
                        ? static_cast<double>(correct[c]) / static_cast<double>(gold_n[c])
                        : 0.0;
    double f1 = precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall)
                                         : 0.0;
    f1_sum += f1;
  }

  PerformanceScores out;
  out.macro_accuracy = recall_sum / static_cast<double>(present);
  out.macro_f1 = f1_sum / 2.0;
  return out;
}

bool eighty_percent_pass(const MetricValue& deviation) {
  return deviation.is_finite() && deviation.value() <= 0.2;
}

EightyPercentFlags eighty_percent_check(const DeviationVector& d) {
  EightyPercentFlags f;
  f.di = eighty_percent_pass(d.di);
  f.tpr = eighty_percent_pass(d.tpr);
  f.fpr = eighty_percent_pass(d.fpr);
  f.ppv = eighty_percent_pass(d.ppv);
  f.for_ = eighty_percent_pass(d.for_);
  f.acc = eighty_percent_pass(d.acc);
  return f;
}

namespace {

// Accumulates a mean where INFINITE absorbs and UNDEFINED is excluded.
struct MeanAcc {
  double sum = 0.0;
  int finite = 0;
  bool infinite = false;
  int excluded = 0;

  void add(const MetricValue& v) {
    switch (v.kind()) {
      case MetricValue::Kind::Finite:
        sum += v.value();
        ++finite;
        break;
      case MetricValue::Kind::Infinite:
        infinite = true;
        break;
      case MetricValue::Kind::Undefined:
        ++excluded;
        break;
    }
  }

  MetricValue result() const {
    if (infinite) return MetricValue::infinite();
    if (finite == 0) return MetricValue::undefined();
    return MetricValue::finite(sum / static_cast<double>(finite));
  }
};

}  // namespace

AggregateRow aggregate(const std::vector<FairnessReport>& reports) {
  if (reports.empty()) throw Error("cannot aggregate an empty report list");
  MeanAcc acc_m, f1_m;
  std::array<MeanAcc, 6> dev;
  for (const FairnessReport& r : reports) {
    acc_m.add(MetricValue::finite(r.performance.macro_accuracy));
    f1_m.add(MetricValue::finite(r.performance.macro_f1));
    dev[0].add(r.deviations.di);
    dev[1].add(r.deviations.tpr);
    dev[2].add(r.deviations.fpr);
    dev[3].add(r.deviations.ppv);
    dev[4].add(r.deviations.for_);
    dev[5].add(r.deviations.acc);
  }
  AggregateRow out;
  out.report_count = static_cast<int>(reports.size());
  out.macro_accuracy = acc_m.result();
  out.macro_f1 = f1_m.result();
  out.deviations.di = dev[0].result();
  out.deviations.tpr = dev[1].result();
  out.deviations.fpr = dev[2].result();
  out.deviations.ppv = dev[3].result();
  out.deviations.for_ = dev[4].result();
  out.deviations.acc = dev[5].result();
  for (int i = 0; i < 6; ++i) out.undefined_excluded[i] = dev[i].excluded;
  return out;
}

}  // namespace fairicl
