#include <doctest.h>

#include "schur/report_io.hpp"

using namespace schur;

TEST_CASE("frequency report JSON round-trip: exhaustive") {
  ExperimentSpec spec;
  spec.p = 3;
  spec.n = 2;
  spec.depth = 3;
  FrequencyReport rep = run_experiment(spec);
  auto j = to_json(rep);
  FrequencyReport back = frequency_report_from_json(j);
  CHECK(equivalent(rep, back));
  CHECK(to_json(back) == j);
}

TEST_CASE("frequency report JSON round-trip: monte carlo") {
  ExperimentSpec spec;
  spec.p = 3;
  spec.n = 1;
  spec.depth = 4;
  spec.exhaustive = false;
  spec.samples = 5000;
  spec.master_seed = 99;
  FrequencyReport rep = run_experiment(spec);
  FrequencyReport back = frequency_report_from_json(to_json(rep));
  CHECK(equivalent(rep, back));
  // deviations survive the trip within float formatting
  for (std::size_t i = 0; i < rep.classes.size(); ++i)
    CHECK(back.classes[i].sigma_dev == doctest::Approx(rep.classes[i].sigma_dev));
}

TEST_CASE("text rendering contains every class label and the verdict data") {
  ExperimentSpec spec;
  spec.p = 3;
  spec.n = 1;
  spec.depth = 4;
  FrequencyReport rep = run_experiment(spec);
  std::string text = to_text(rep);
  for (const auto& c : rep.classes)
    CHECK(text.find(c.label) != std::string::npos);
  CHECK(text.find("truncation depth 4") != std::string::npos);
}

TEST_CASE("survey report JSON round-trip and CSV shape") {
  SurveyOptions opt;
  opt.p = 3;
  opt.bound = 500;
  SurveyReport rep = survey(opt);
  SurveyReport back = survey_report_from_json(to_json(rep));
  CHECK(equivalent(rep, back));

  auto rows = survey_rows(opt);
  std::string csv = to_csv(rows);
  CHECK(csv.rfind("discriminant,class_number,p_type", 0) == 0);
  std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == rows.size() + 1);
}

TEST_CASE("rational fields round-trip exactly") {
  FrequencyReport rep;
  rep.spec.exhaustive = false;
  rep.spec.samples = 10;
  rep.total = 10;
  ClassRecord c;
  c.label = "x";
  c.expected = Rat(16, 27);
  c.probability = Rat(456, 1234567891);
  c.aut_order = Int("123456789123456789");
  rep.classes.push_back(c);
  FrequencyReport back = frequency_report_from_json(to_json(rep));
  CHECK(*back.classes[0].expected == Rat(16, 27));
  CHECK(*back.classes[0].probability == Rat(456, 1234567891));
  CHECK(*back.classes[0].aut_order == Int("123456789123456789"));
}
