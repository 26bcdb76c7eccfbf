#ifndef FCART_REPORT_HPP
#define FCART_REPORT_HPP

#include <nlohmann/json.hpp>

#include "fcart/invariants.hpp"
#include "fcart/oracle.hpp"

namespace fcart {

// JSON payloads, schema "fcart/1". nlohmann::json keeps keys sorted, so a
// fixed job serializes to identical bytes on every run.
using json = nlohmann::json;

json to_json(const Ideal& I);               // array of reduced-GB strings
json to_json(const NuLevelSet& s);
json to_json(const NuTree& t);
json to_json(const BsrCertificate& c);
json to_json(const StabilizationRecord& r);
json to_json(const DsideReport& r);
json to_json(const TestIdealRecord& r);
json to_json(const FjnReport& r);
json to_json(const CrosscheckReport& r);
json to_json(const ProbeReport& r);
json to_json(const oracle::OracleReport& r);

const char* fjn_side_name(FjnSide side);

} // namespace fcart

#endif
