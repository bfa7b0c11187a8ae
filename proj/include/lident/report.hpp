#ifndef LIDENT_REPORT_HPP
#define LIDENT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "lident/sweep.hpp"

namespace lident {

// 17 significant digits; losslessly round-trips a double.
std::string format17(double x);

nlohmann::json record_to_json(const VerificationRecord& rec);
nlohmann::json sweep_to_json(const SweepResult& result);
std::string sweep_to_csv(const SweepResult& result);

nlohmann::json adjudication_to_json(const AdjudicationReport& report);
std::string adjudication_to_text(const AdjudicationReport& report);

}  // namespace lident

#endif
