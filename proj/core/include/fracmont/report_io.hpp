#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fracmont/bounds.hpp"
#include "fracmont/identities.hpp"

namespace fracmont {
namespace io {

enum class Format { table, csv, json };

/// 17 significant digits: enough for doubles to round-trip bit-exactly.
std::string format_real(double v);

/// A report row as emitted by the CLI: the report plus the function/weight
/// labels, the per-row tolerance, and the PASS/FAIL verdict.
struct IdentityRow {
    std::string f, w;
    IdentityReport report;
    double tolerance = 0.0;
    bool pass = false;
};

struct BoundRow {
    std::string f, w;
    BoundReport report;
    double tolerance = 0.0;
    bool pass = false;
};

extern const char* const kIdentityCsvHeader;
extern const char* const kBoundCsvHeader;

std::string to_csv(const IdentityRow& row);
std::string to_csv(const BoundRow& row);
nlohmann::json to_json(const IdentityRow& row);
nlohmann::json to_json(const BoundRow& row);
std::string to_table(const IdentityRow& row);
std::string to_table(const BoundRow& row);

/// Inverse of the serializers; used by the round-trip contract tests.
IdentityRow identity_from_csv(const std::string& line);
BoundRow bound_from_csv(const std::string& line);
IdentityRow identity_from_json(const nlohmann::json& j);
BoundRow bound_from_json(const nlohmann::json& j);

} // namespace io
} // namespace fracmont
