#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "fairicl/errors.hpp"
#include "fairicl/metrics.hpp"

using namespace fairicl;

TEST_CASE("rate sentinel table") {
  CHECK(MetricValue::rate(1, 2) == MetricValue::finite(0.5));
  CHECK(MetricValue::rate(3, 0).is_infinite());
  CHECK(MetricValue::rate(0, 0).is_undefined());
  CHECK(MetricValue::rate(0, 5) == MetricValue::finite(0.0));
}

TEST_CASE("ratio_of sentinel table") {
  auto fin = [](double v) { return MetricValue::finite(v); };
  auto inf = MetricValue::infinite();
  auto undef = MetricValue::undefined();

  CHECK(MetricValue::ratio_of(fin(1), fin(2)) == fin(0.5));
  CHECK(MetricValue::ratio_of(fin(1), fin(0)).is_infinite());
  CHECK(MetricValue::ratio_of(fin(0), fin(0)).is_undefined());
  CHECK(MetricValue::ratio_of(inf, inf).is_undefined());
  CHECK(MetricValue::ratio_of(inf, fin(3)).is_infinite());
  CHECK(MetricValue::ratio_of(fin(3), inf) == fin(0.0));
  CHECK(MetricValue::ratio_of(undef, fin(1)).is_undefined());
  CHECK(MetricValue::ratio_of(fin(1), undef).is_undefined());
  CHECK(MetricValue::ratio_of(undef, inf).is_undefined());
}

TEST_CASE("deviation propagates sentinels") {
  CHECK(MetricValue::finite(0.75).deviation() == MetricValue::finite(0.25));
  CHECK(MetricValue::finite(2.0).deviation() == MetricValue::finite(1.0));
  CHECK(MetricValue::infinite().deviation().is_infinite());
  CHECK(MetricValue::undefined().deviation().is_undefined());
  CHECK_THROWS_AS(MetricValue::infinite().value(), Error);
  CHECK_THROWS_AS(MetricValue::undefined().value(), Error);
}

namespace {

std::vector<IncomeLabel> labels(const std::vector<int>& bits) {
  std::vector<IncomeLabel> out;
  for (int b : bits) out.push_back(b ? IncomeLabel::GT50K : IncomeLabel::LE50K);
  return out;
}

std::vector<Group> groups_of(const std::vector<int>& bits) {
  std::vector<Group> out;
  for (int b : bits) out.push_back(b ? Group::Privileged : Group::Unprivileged);
  return out;
}

}  // namespace

TEST_CASE("group_confusion splits by group with >50K as the positive class") {
  auto [f, m] = group_confusion(labels({1, 0, 1, 0}), labels({1, 1, 0, 0}),
                                groups_of({0, 0, 1, 1}));
  CHECK(f == GroupConfusion{1, 0, 0, 1});
  CHECK(m == GroupConfusion{0, 1, 1, 0});
  CHECK_THROWS_AS(group_confusion(labels({1}), labels({1, 0}), groups_of({0, 1})),
                  AlignmentError);
}

TEST_CASE("ratios on the small-fixture confusion") {
  GroupConfusion f{6, 2, 8, 4};
  GroupConfusion m{8, 0, 10, 2};
  RatioVector r = fairness_ratios(f, m);
  CHECK(r.di == MetricValue::finite(1.0));
  CHECK(r.tpr == MetricValue::finite(0.6 / 0.8));  // (6/10)/(8/10); not bitwise 0.75
  CHECK(r.fpr.is_infinite());
  CHECK(r.ppv == MetricValue::finite(0.75));
  CHECK(r.for_ == MetricValue::finite(2.0));
  CHECK(r.acc == MetricValue::finite(0.7 / 0.9));

  DeviationVector d = deviations(r);
  CHECK(d.di == MetricValue::finite(0.0));
  CHECK(d.tpr == MetricValue::finite(1.0 - 0.6 / 0.8));
  CHECK(d.fpr.is_infinite());
  CHECK(d.for_ == MetricValue::finite(1.0));

  EightyPercentFlags flags = eighty_percent_check(d);
  CHECK(flags.di);
  CHECK_FALSE(flags.tpr);
  CHECK_FALSE(flags.fpr);
  CHECK_FALSE(flags.acc);
}

namespace {

MetricValue decode(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "inf") return MetricValue::infinite();
  if (kind == "undef") return MetricValue::undefined();
  return MetricValue::finite(j.at("value").get<double>());
}

void check_against(const MetricValue& got, const MetricValue& want, std::size_t case_no,
                   std::size_t col) {
  INFO("case ", case_no, " column ", col);
  REQUIRE(got.kind() == want.kind());
  if (want.is_finite()) {
    CHECK(std::fabs(got.value() - want.value()) <= 1e-12);
  }
}

}  // namespace

TEST_CASE("frozen oracle cases agree on every ratio and deviation") {
  std::ifstream in("tests/fixtures/metric_cases.json");
  REQUIRE(in.good());
  nlohmann::json doc = nlohmann::json::parse(in);
  const auto& cases = doc.at("cases");
  REQUIRE(cases.size() == 400);

  std::size_t case_no = 0;
  for (const auto& c : cases) {
    ++case_no;
    auto preds = labels(c.at("preds").get<std::vector<int>>());
    auto golds = labels(c.at("golds").get<std::vector<int>>());
    auto grp = groups_of(c.at("groups").get<std::vector<int>>());
    auto [f, m] = group_confusion(preds, golds, grp);
    RatioVector r = fairness_ratios(f, m);
    DeviationVector d = deviations(r);

    const MetricValue got_r[6] = {r.di, r.tpr, r.fpr, r.ppv, r.for_, r.acc};
    const MetricValue got_d[6] = {d.di, d.tpr, d.fpr, d.ppv, d.for_, d.acc};
    for (std::size_t i = 0; i < 6; ++i) {
      check_against(got_r[i], decode(c.at("ratios")[i]), case_no, i);
      check_against(got_d[i], decode(c.at("deviations")[i]), case_no, i + 6);
    }
  }
}

TEST_CASE("performance hand cases") {
  // Perfect predictions.
  auto p1 = performance(labels({0, 1, 0, 1}), labels({0, 1, 0, 1}));
  CHECK(p1.macro_accuracy == doctest::Approx(1.0));
  CHECK(p1.macro_f1 == doctest::Approx(1.0));

  // Everything predicted <=50K over balanced golds: recall 1 and 0, F1 2/3 and 0.
  auto p2 = performance(labels({0, 0, 0, 0}), labels({0, 0, 1, 1}));
  CHECK(p2.macro_accuracy == doctest::Approx(0.5));
  CHECK(p2.macro_f1 == doctest::Approx(1.0 / 3.0));

  // Single-class golds: balanced accuracy averages only the present class.
  auto p3 = performance(labels({0, 0, 1}), labels({0, 0, 0}));
  CHECK(p3.macro_accuracy == doctest::Approx(2.0 / 3.0));

  // The small-fixture aggregate confusion: tp=14 fp=2 tn=18 fn=6.
  std::vector<int> preds, golds;
  auto fill = [&](int p, int g, int n) {
    for (int i = 0; i < n; ++i) {
      preds.push_back(p);
      golds.push_back(g);
    }
  };
  fill(1, 1, 14);
  fill(1, 0, 2);
  fill(0, 0, 18);
  fill(0, 1, 6);
  auto p4 = performance(labels(preds), labels(golds));
  CHECK(p4.macro_accuracy == doctest::Approx(0.8));
  CHECK(p4.macro_f1 == doctest::Approx(0.79797979797979796));

  CHECK_THROWS_AS(performance({}, {}), Error);
  CHECK_THROWS_AS(performance(labels({1}), labels({1, 0})), AlignmentError);
}

TEST_CASE("eighty percent boundary") {
  CHECK(eighty_percent_pass(MetricValue::finite(0.2)));
  CHECK(eighty_percent_pass(MetricValue::finite(0.0)));
  CHECK_FALSE(eighty_percent_pass(MetricValue::finite(0.2000001)));
  CHECK_FALSE(eighty_percent_pass(MetricValue::infinite()));
  CHECK_FALSE(eighty_percent_pass(MetricValue::undefined()));
}

namespace {

FairnessReport report_with(MetricValue di_dev, double acc = 0.5) {
  FairnessReport r;
  r.deviations.di = di_dev;
  r.deviations.tpr = MetricValue::finite(0.1);
  r.deviations.fpr = MetricValue::finite(0.1);
  r.deviations.ppv = MetricValue::finite(0.1);
  r.deviations.for_ = MetricValue::finite(0.1);
  r.deviations.acc = MetricValue::finite(0.1);
  r.performance.macro_accuracy = acc;
  r.performance.macro_f1 = acc;
  r.parsed_count = 1;
  return r;
}

}  // namespace

TEST_CASE("aggregate means, absorbs infinity, excludes undefined") {
  std::vector<FairnessReport> reports = {report_with(MetricValue::finite(0.2), 0.25),
                                         report_with(MetricValue::finite(0.4), 0.75)};
  AggregateRow row = aggregate(reports);
  CHECK(row.report_count == 2);
  CHECK(row.macro_accuracy == MetricValue::finite(0.5));
  CHECK(row.deviations.di.is_finite());
  CHECK(row.deviations.di.value() == doctest::Approx(0.3));
  CHECK(row.undefined_excluded[0] == 0);

  reports.push_back(report_with(MetricValue::infinite()));
  CHECK(aggregate(reports).deviations.di.is_infinite());

  std::vector<FairnessReport> with_undef = {report_with(MetricValue::undefined()),
                                            report_with(MetricValue::finite(0.4))};
  AggregateRow row2 = aggregate(with_undef);
  CHECK(row2.deviations.di == MetricValue::finite(0.4));
  CHECK(row2.undefined_excluded[0] == 1);

  std::vector<FairnessReport> all_undef = {report_with(MetricValue::undefined()),
                                           report_with(MetricValue::undefined())};
  AggregateRow row3 = aggregate(all_undef);
  CHECK(row3.deviations.di.is_undefined());
  CHECK(row3.undefined_excluded[0] == 2);

  CHECK_THROWS_AS(aggregate({}), Error);
}
