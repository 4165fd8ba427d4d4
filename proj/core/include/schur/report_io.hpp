#pragma once

#include <string>

#include <json.hpp>

#include "schur/class_groups.hpp"
#include "schur/experiments.hpp"

namespace schur {

nlohmann::json to_json(const FrequencyReport& report);
FrequencyReport frequency_report_from_json(const nlohmann::json& j);
std::string to_text(const FrequencyReport& report);

nlohmann::json to_json(const SurveyReport& report);
SurveyReport survey_report_from_json(const nlohmann::json& j);
std::string to_text(const SurveyReport& report);
std::string to_csv(const std::vector<SurveyRow>& rows);

bool equivalent(const FrequencyReport& a, const FrequencyReport& b);
bool equivalent(const SurveyReport& a, const SurveyReport& b);

}  // namespace schur
