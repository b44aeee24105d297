#include <gtest/gtest.h>

#include <sstream>

#include "padic/suite.hpp"

using namespace padic;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(SeriesJson, RoundTripsCyclotomicCoefficients) {
  const TruncatedSeries s(2, -1,
                          {Cyclotomic(2, q(3, 7)), Cyclotomic::root_of_unity(2, 3, 3) * q(-5, 2),
                           Cyclotomic::zero(2), Cyclotomic(2, q(1))},
                          4);
  EXPECT_EQ(series_from_json(series_to_json(s)), s);
}

TEST(SeriesJson, MalformedInputIsAParseError) {
  try {
    series_from_json("{\"p\": 2}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "PARSE");
  }
  EXPECT_THROW(series_from_json("not json"), Error);
}

TEST(ReportJson, RoundTrip) {
  const DatumPtr g = make_datum("gl1");
  const VerificationReport r = verify_theorem(*g, 3, {q(1)}, 1, 4);
  EXPECT_EQ(report_from_json(report_to_json(r)), r);
  VerificationReport bare;
  bare.check = "x";
  bare.outcome = Outcome::kSkipped;
  bare.values["k"] = "v";
  EXPECT_EQ(report_from_json(report_to_json(bare)), bare);
}

TEST(Csv, SeriesRows) {
  const TruncatedSeries s(2, 0, {Cyclotomic(2, q(1)), Cyclotomic(2, q(-1, 2))}, 1);
  const auto rows = series_csv_rows(s);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "0");
  EXPECT_EQ(rows[0][2], "1");
  EXPECT_EQ(rows[1][0], "1");
  EXPECT_EQ(rows[1][2], "-1/2");
}

TEST(Csv, ReportBlocksHaveEqualLength) {
  const DatumPtr g = make_datum("glnxgln:2");
  const VerificationReport r = verify_theorem(*g, 2, {q(1), q(0), q(0), q(1)}, 1, 4);
  std::istringstream in(report_to_csv(r));
  std::string line;
  int lhs = 0, rhs = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    lhs += line.find(",lhs,") != std::string::npos;
    rhs += line.find(",rhs,") != std::string::npos;
  }
  EXPECT_GT(lhs, 0);
  EXPECT_EQ(lhs, rhs);
}

TEST(Outcome, Names) {
  for (Outcome o : {Outcome::kPass, Outcome::kFail, Outcome::kInconclusive, Outcome::kSkipped, Outcome::kInfo})
    EXPECT_EQ(parse_outcome(outcome_name(o)), o);
  EXPECT_THROW(parse_outcome("MAYBE"), Error);
}

TEST(Suite, WorkerCountDoesNotChangeBytes) {
  RunConfig one, three;
  one.group = three.group = "gl1";
  three.workers = 3;
  EXPECT_EQ(run_suite("theorem", one).to_json(), run_suite("theorem", three).to_json());
}

TEST(Suite, UnknownNameIsRejected) { EXPECT_THROW(run_suite("everything", RunConfig{}), Error); }

TEST(Suite, RunTasksKeepsOrder) {
  std::vector<std::function<std::vector<VerificationReport>()>> tasks;
  for (int i = 0; i < 12; ++i)
    tasks.push_back([i] {
      VerificationReport r;
      r.check = std::to_string(i);
      return std::vector<VerificationReport>{r};
    });
  const auto out = run_tasks(tasks, 4);
  ASSERT_EQ(out.size(), 12u);
  for (int i = 0; i < 12; ++i) EXPECT_EQ(out[i].check, std::to_string(i));
}
