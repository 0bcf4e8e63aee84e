#pragma once
// JSON, CSV and plain-text renderings of every report. Arbitrary-precision
// values are emitted as decimal strings; small integers as JSON numbers.

#include "repsq/classifier.hpp"
#include "repsq/multibase.hpp"
#include "repsq/reduce.hpp"
#include "repsq/table_b.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace repsq::io {

using nlohmann::json;

json to_json(const CaseFamily& f);
json to_json(const TableA& t);
json to_json(const SieveReport& r);
json to_json(const Certificate& c);
json to_json(const ReductionReport& r);
json to_json(const MordellReport& r);
json to_json(const Solution& s);
json to_json(const EnumerationResult& e);
json to_json(const IdentityCheck& c);
json to_json(const ResidualObligation& o);
json to_json(const FullReport& r);

std::string solutions_csv(const std::vector<Solution>& solutions, bool with_base);

std::string render(const TableA& t);
std::string render(const SieveReport& r);
std::string render(const Certificate& c);
std::string render(const ReductionReport& r, bool show_verdicts);
std::string render(const MordellReport& r);
std::string render(const EnumerationResult& e);
std::string render(const std::vector<IdentityCheck>& checks);
std::string render(const FullReport& r);

std::string describe(const Solution& s);

}  // namespace repsq::io
