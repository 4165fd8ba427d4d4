#include "schur/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace schur {

namespace {

std::string rat_str(const Rat& r) { return r.str(); }

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

nlohmann::json to_json(const FrequencyReport& report) {
  nlohmann::json j;
  j["spec"] = {{"p", report.spec.p},
               {"n", report.spec.n},
               {"depth", report.spec.depth},
               {"mode", report.spec.exhaustive ? "exhaustive" : "monte-carlo"},
               {"samples", report.spec.samples},
               {"seed", report.spec.master_seed},
               {"workers", report.spec.workers}};
  j["total"] = report.total.str();
  j["truncation_note"] = report.truncation_note;
  j["classes"] = nlohmann::json::array();
  for (const ClassRecord& c : report.classes) {
    nlohmann::json e;
    e["label"] = c.label;
    e["d"] = c.d;
    e["observed"] = c.observed;
    if (!report.spec.exhaustive) e["observed_alt"] = c.observed_alt;
    if (c.m) e["m"] = *c.m;
    if (c.aut_order) e["aut_order"] = c.aut_order->str();
    if (c.expected) e["expected"] = rat_str(*c.expected);
    if (c.probability) e["probability"] = rat_str(*c.probability);
    e["sigma_dev"] = c.sigma_dev;
    if (!report.spec.exhaustive) e["alt_sigma_dev"] = c.alt_sigma_dev;
    if (!c.note.empty()) e["note"] = c.note;
    j["classes"].push_back(std::move(e));
  }
  return j;
}

FrequencyReport frequency_report_from_json(const nlohmann::json& j) {
  FrequencyReport r;
  const auto& s = j.at("spec");
  r.spec.p = s.at("p").get<std::uint32_t>();
  r.spec.n = s.at("n").get<unsigned>();
  r.spec.depth = s.at("depth").get<unsigned>();
  r.spec.exhaustive = s.at("mode").get<std::string>() == "exhaustive";
  r.spec.samples = s.at("samples").get<std::uint64_t>();
  r.spec.master_seed = s.at("seed").get<std::uint64_t>();
  r.spec.workers = s.at("workers").get<unsigned>();
  r.total = Int(j.at("total").get<std::string>());
  r.truncation_note = j.value("truncation_note", "");
  for (const auto& e : j.at("classes")) {
    ClassRecord c;
    c.label = e.at("label").get<std::string>();
    c.d = e.at("d").get<unsigned>();
    c.observed = e.at("observed").get<std::uint64_t>();
    c.observed_alt = e.value("observed_alt", std::uint64_t{0});
    if (e.contains("m")) c.m = e.at("m").get<unsigned>();
    if (e.contains("aut_order")) c.aut_order = Int(e.at("aut_order").get<std::string>());
    if (e.contains("expected")) c.expected = rat_parse(e.at("expected").get<std::string>());
    if (e.contains("probability")) c.probability = rat_parse(e.at("probability").get<std::string>());
    c.sigma_dev = e.value("sigma_dev", 0.0);
    c.alt_sigma_dev = e.value("alt_sigma_dev", 0.0);
    c.note = e.value("note", "");
    r.classes.push_back(std::move(c));
  }
  return r;
}

std::string to_text(const FrequencyReport& report) {
  std::ostringstream os;
  os << (report.spec.exhaustive ? "exhaustive" : "monte-carlo") << " classification: p = "
     << report.spec.p << ", n = " << report.spec.n << ", depth = " << report.spec.depth;
  if (!report.spec.exhaustive)
    os << ", samples = " << report.spec.samples << ", seed = " << report.spec.master_seed;
  os << "\ntotal tuples: " << report.total.str() << "\n";
  os << std::left << std::setw(30) << "class" << std::right << std::setw(3) << "d"
     << std::setw(4) << "m" << std::setw(10) << "|Aut_s|" << std::setw(10) << "observed"
     << std::setw(16) << "expected" << std::setw(9) << "dev" << "\n";
  for (const ClassRecord& c : report.classes) {
    os << std::left << std::setw(30) << c.label << std::right << std::setw(3) << c.d
       << std::setw(4) << (c.m ? std::to_string(*c.m) : "-")
       << std::setw(10) << (c.aut_order ? c.aut_order->str() : "-")
       << std::setw(10) << c.observed << std::setw(16) << (c.expected ? c.expected->str() : "-");
    if (report.spec.exhaustive)
      os << std::setw(9) << "-";
    else
      os << std::setw(8) << std::fixed << std::setprecision(2) << c.sigma_dev << "s";
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
  }
  os << report.truncation_note << "\n";
  return os.str();
}

nlohmann::json to_json(const SurveyReport& report) {
  nlohmann::json j;
  j["p"] = report.options.p;
  j["bound"] = report.options.bound;
  j["filters"] = {{"include_p_dividing", report.options.include_p_dividing},
                  {"residue", report.options.residue},
                  {"modulus", report.options.modulus}};
  j["discriminants"] = report.discriminants;
  j["c_inf"] = report.c_inf;
  j["types"] = nlohmann::json::array();
  for (const SurveyTypeRecord& t : report.types) {
    j["types"].push_back({{"partition", t.partition},
                          {"count", t.count},
                          {"frequency", t.frequency},
                          {"prediction", t.prediction}});
  }
  return j;
}

SurveyReport survey_report_from_json(const nlohmann::json& j) {
  SurveyReport r;
  r.options.p = j.at("p").get<std::uint32_t>();
  r.options.bound = j.at("bound").get<long long>();
  r.options.include_p_dividing = j.at("filters").at("include_p_dividing").get<bool>();
  r.options.residue = j.at("filters").at("residue").get<long long>();
  r.options.modulus = j.at("filters").at("modulus").get<long long>();
  r.discriminants = j.at("discriminants").get<std::uint64_t>();
  r.c_inf = j.at("c_inf").get<double>();
  for (const auto& e : j.at("types")) {
    SurveyTypeRecord t;
    t.partition = e.at("partition").get<std::vector<unsigned>>();
    t.count = e.at("count").get<std::uint64_t>();
    t.frequency = e.at("frequency").get<double>();
    t.prediction = e.at("prediction").get<double>();
    r.types.push_back(std::move(t));
  }
  return r;
}

std::string to_text(const SurveyReport& report) {
  std::ostringstream os;
  os << "class group survey: p = " << report.options.p << ", 0 < |d| < " << report.options.bound
     << ", fundamental discriminants: " << report.discriminants << "\n";
  os << "C_inf(" << report.options.p << ") = " << std::setprecision(7) << std::fixed
     << report.c_inf << "\n";
  os << std::left << std::setw(12) << "p-type" << std::right << std::setw(10) << "count"
     << std::setw(12) << "frequency" << std::setw(12) << "prediction" << std::setw(12)
     << "difference" << "\n";
  for (const SurveyTypeRecord& t : report.types) {
    os << std::left << std::setw(12) << partition_str(t.partition) << std::right
       << std::setw(10) << t.count << std::setw(12) << std::setprecision(5) << t.frequency
       << std::setw(12) << t.prediction << std::setw(12) << (t.frequency - t.prediction) << "\n";
  }
  return os.str();
}

std::string to_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "discriminant,class_number,p_type\n";
  for (const SurveyRow& r : rows) {
    os << r.d << "," << r.h << ",\"" << partition_str(r.partition) << "\"\n";
  }
  return os.str();
}

bool equivalent(const FrequencyReport& a, const FrequencyReport& b) {
  if (a.spec.p != b.spec.p || a.spec.n != b.spec.n || a.spec.depth != b.spec.depth ||
      a.spec.exhaustive != b.spec.exhaustive || a.spec.samples != b.spec.samples ||
      a.spec.master_seed != b.spec.master_seed || a.total != b.total ||
      a.classes.size() != b.classes.size())
    return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const ClassRecord &x = a.classes[i], &y = b.classes[i];
    if (x.label != y.label || x.d != y.d || x.observed != y.observed ||
        x.observed_alt != y.observed_alt || x.m != y.m || x.aut_order != y.aut_order ||
        x.expected != y.expected || x.probability != y.probability || x.note != y.note)
      return false;
  }
  return true;
}

bool equivalent(const SurveyReport& a, const SurveyReport& b) {
  if (a.options.p != b.options.p || a.options.bound != b.options.bound ||
      a.discriminants != b.discriminants || a.types.size() != b.types.size())
    return false;
  for (std::size_t i = 0; i < a.types.size(); ++i) {
    const SurveyTypeRecord &x = a.types[i], &y = b.types[i];
    if (x.partition != y.partition || x.count != y.count) return false;
  }
  return true;
}

}  // namespace schur
