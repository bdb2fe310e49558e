#pragma once

// Serialization of conjugate reports and growth certificates. JSON and CSV are
// stable formats; the table format is for people.

#include <string>
#include <vector>

#include <json.hpp>

#include "crysalite/conjugate.hpp"

namespace crysalite {

using ordered_json = nlohmann::ordered_json;

struct RingSummary {
    std::uint32_t prime = 0;
    std::vector<std::string> vars;
    std::string poly;
    int degree = 0;
};

ordered_json report_to_json(const ConjugateReport& rep);
/// Inverse of report_to_json. Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
ConjugateReport report_from_json(const ordered_json& j);

/// Rows "section,n,cohdeg,weight,value" with sections piece, total, cumulative.
std::string report_to_csv(const ConjugateReport& rep);
std::string report_to_table(const ConjugateReport& rep);

ordered_json certificate_to_json(const RingSummary& ring, const GrowthCertificate& cert);
std::string certificate_to_csv(const RingSummary& ring, const GrowthCertificate& cert);
std::string certificate_to_table(const RingSummary& ring, const GrowthCertificate& cert);

/// Fixed text attached to reports: only mod-p dimensions are computed.
extern const char* const kCoefficientNote;

}  // namespace crysalite
