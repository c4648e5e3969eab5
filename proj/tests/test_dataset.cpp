#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fairicl/config.hpp"
#include "fairicl/dataset.hpp"
#include "fairicl/errors.hpp"

using namespace fairicl;

namespace {

std::string row(int age, const std::string& gender, const std::string& income,
                const std::string& workclass = "Private") {
  return std::to_string(age) + "," + workclass +
         ",77516,Bachelors,13,Never-married,Sales,Not-in-family,White," + gender +
         ",0,0,40,United-States," + income;
}

RecordSet load_text(const std::string& text, bool has_header = false) {
  std::istringstream in(text);
  return load_records(in, default_schema(), has_header);
}

}  // namespace

TEST_CASE("rows with the null marker are dropped but consume record ids") {
  RecordSet rs = load_text(row(30, "Male", "<=50K") + "\n" +
                           row(40, "Female", ">50K", "?") + "\n" +
                           row(50, "Female", ">50K") + "\n");
  REQUIRE(rs.size() == 2);
  CHECK(rs.records[0].record_id == 0);
  CHECK(rs.records[1].record_id == 2);
  CHECK(rs.records[1].age == 50);
}

TEST_CASE("blank lines are skipped without consuming ids") {
  RecordSet rs = load_text("\n" + row(30, "Male", "<=50K") + "\n\n  \n" +
                           row(50, "Female", ">50K") + "\n");
  REQUIRE(rs.size() == 2);
  CHECK(rs.records[0].record_id == 0);
  CHECK(rs.records[1].record_id == 1);
}

TEST_CASE("header is skipped when declared") {
  std::string header =
      "age,workclass,final weight,education,education number,marital status,occupation,"
      "relationship,race,gender,capital gain,capital loss,hours per week,native country,"
      "income";
  RecordSet rs = load_text(header + "\n" + row(25, "Female", "<=50K") + "\n", true);
  REQUIRE(rs.size() == 1);
  CHECK(rs.records[0].record_id == 0);
  CHECK(rs.records[0].age == 25);
}

TEST_CASE("carriage returns and field padding are tolerated") {
  RecordSet rs = load_text(" 33 , Private ,77516, Bachelors ,13,Never-married,Sales,"
                           "Not-in-family,White, Male ,0,0,40,United-States, >50K \r\n");
  REQUIRE(rs.size() == 1);
  CHECK(rs.records[0].age == 33);
  CHECK(rs.records[0].gender == "Male");
  CHECK(rs.records[0].income == IncomeLabel::GT50K);
}

TEST_CASE("labels accept a trailing period") {
  RecordSet rs = load_text(row(30, "Male", "<=50K.") + "\n" + row(31, "Male", ">50K.") + "\n");
  CHECK(rs.records[0].income == IncomeLabel::LE50K);
  CHECK(rs.records[1].income == IncomeLabel::GT50K);
}

TEST_CASE("malformed rows raise typed errors") {
  CHECK_THROWS_AS(load_text("1,2,3\n"), ParseError);                      // width
  CHECK_THROWS_AS(load_text(row(30, "Male", "50K+") + "\n"), LabelError);  // label
  std::string bad_age = row(30, "Male", "<=50K");
  bad_age.replace(0, 2, "3x");
  CHECK_THROWS_AS(load_text(bad_age + "\n"), ParseError);
}

TEST_CASE("schema can permute columns") {
  std::vector<std::string> schema = {"income", "gender", "age", "workclass",
                                     "final weight", "education", "education number",
                                     "marital status", "occupation", "relationship",
                                     "race", "capital gain", "capital loss",
                                     "hours per week", "native country"};
  std::istringstream in(">50K,Female,44,Private,1,HS-grad,9,Divorced,Sales,Unmarried,"
                        "White,0,0,38,Canada\n");
  RecordSet rs = load_records(in, schema, false);
  REQUIRE(rs.size() == 1);
  CHECK(rs.records[0].age == 44);
  CHECK(rs.records[0].gender == "Female");
  CHECK(rs.records[0].income == IncomeLabel::GT50K);
  CHECK(rs.records[0].native_country == "Canada");
}

TEST_CASE("bad schemas are rejected") {
  auto schema = default_schema();
  schema[0] = "years";  // unknown name, and "age" is now missing
  std::istringstream in(row(30, "Male", "<=50K"));
  CHECK_THROWS_AS(load_records(in, schema, false), ConfigError);

  auto dup = default_schema();
  dup[1] = "age";
  std::istringstream in2(row(30, "Male", "<=50K"));
  CHECK_THROWS_AS(load_records(in2, dup, false), ConfigError);

  auto shorter = default_schema();
  shorter.pop_back();
  std::istringstream in3(row(30, "Male", "<=50K"));
  CHECK_THROWS_AS(load_records(in3, shorter, false), ConfigError);
}

TEST_CASE("group_of matches case-insensitively and rejects other values") {
  RecordSet rs = load_text(row(30, "FEMALE", "<=50K") + "\n" + row(31, "male", ">50K") + "\n");
  ProtectedSpec spec;
  CHECK(group_of(rs.records[0], spec) == Group::Unprivileged);
  CHECK(group_of(rs.records[1], spec) == Group::Privileged);

  RecordSet other = load_text(row(32, "Unknown", "<=50K") + "\n");
  CHECK_THROWS_AS(group_of(other.records[0], spec), Error);
}

TEST_CASE("serialization renders every feature in order") {
  RecordSet rs = load_text(
      "39,State-gov,77516,Bachelors,13,Never-married,Adm-clerical,Not-in-family,White,"
      "Male,2174,0,40,United-States,<=50K\n");
  const IndividualRecord& r = rs.records[0];
  CHECK(serialize_record(r, false) ==
        "<age: 39, workclass: State-gov, final weight: 77516, education: Bachelors, "
        "education number: 13, marital status: Never-married, occupation: Adm-clerical, "
        "relationship: Not-in-family, race: White, gender: Male, capital gain: 2174, "
        "capital loss: 0, hours per week: 40, native country: United-States>");
  CHECK(serialize_record(r, true) ==
        "<age: 39, workclass: State-gov, final weight: 77516, education: Bachelors, "
        "education number: 13, marital status: Never-married, occupation: Adm-clerical, "
        "relationship: Not-in-family, race: White, gender: Male, capital gain: 2174, "
        "capital loss: 0, hours per week: 40, native country: United-States, "
        "income: <=50K>");
  CHECK(feature_value(r, "hours per week") == "40");
  CHECK_THROWS_AS(feature_value(r, "hours"), Error);
}

namespace {

RecordSet exact_cells(std::size_t per_cell) {
  RecordSet rs;
  std::int64_t id = 0;
  for (const char* gender : {"Female", "Male"}) {
    for (const char* income : {"<=50K", ">50K"}) {
      for (std::size_t i = 0; i < per_cell; ++i) {
        RecordSet one = load_text(row(20 + int(i % 60), gender, income) + "\n");
        one.records[0].record_id = id++;
        rs.records.push_back(one.records[0]);
      }
    }
  }
  return rs;
}

}  // namespace

TEST_CASE("split consumes whole cells when they are exactly the test size") {
  RecordSet rs = exact_cells(kTestCellSize);
  SplitResult split = stratified_split(rs, 123);
  CHECK(split.test_set.size() == 4 * kTestCellSize);
  CHECK(split.demo_pool.empty());
  for (std::size_t i = 1; i < split.test_set.size(); ++i) {
    CHECK(split.test_set.records[i - 1].record_id < split.test_set.records[i].record_id);
  }
}

TEST_CASE("short cells are reported") {
  RecordSet rs = exact_cells(kTestCellSize - 1);
  CHECK_THROWS_AS(stratified_split(rs, 123), InsufficientStratumError);
}

TEST_CASE("split of the bundled synthetic dataset is balanced and deterministic") {
  RecordSet rs = load_records_file("data/synth_adult_1200.csv", default_schema(), true);
  REQUIRE(rs.size() == 1200);

  SplitResult a = stratified_split(rs, 7);
  CHECK(a.test_set.size() == 1000);
  CHECK(a.demo_pool.size() == 200);

  ProtectedSpec spec;
  std::map<std::pair<Group, IncomeLabel>, int> cells;
  for (const IndividualRecord& r : a.test_set.records) {
    ++cells[{group_of(r, spec), r.income}];
  }
  REQUIRE(cells.size() == 4);
  for (const auto& [key, n] : cells) CHECK(n == int(kTestCellSize));

  // test and pool partition the input
  std::set<std::int64_t> ids;
  for (const IndividualRecord& r : a.test_set.records) ids.insert(r.record_id);
  for (const IndividualRecord& r : a.demo_pool.records) {
    CHECK(ids.count(r.record_id) == 0);
    ids.insert(r.record_id);
  }
  CHECK(ids.size() == 1200);

  // pool preserves input order
  for (std::size_t i = 1; i < a.demo_pool.size(); ++i) {
    CHECK(a.demo_pool.records[i - 1].record_id < a.demo_pool.records[i].record_id);
  }

  SplitResult b = stratified_split(rs, 7);
  REQUIRE(b.test_set.size() == a.test_set.size());
  for (std::size_t i = 0; i < a.test_set.size(); ++i) {
    CHECK(a.test_set.records[i].record_id == b.test_set.records[i].record_id);
  }

  SplitResult c = stratified_split(rs, 8);
  bool any_difference = false;
  for (std::size_t i = 0; i < a.test_set.size(); ++i) {
    if (a.test_set.records[i].record_id != c.test_set.records[i].record_id) {
      any_difference = true;
      break;
    }
  }
  CHECK(any_difference);
}
