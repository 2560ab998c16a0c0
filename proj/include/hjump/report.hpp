#ifndef HJUMP_REPORT_HPP
#define HJUMP_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hjump/frankl_rodl.hpp"
#include "hjump/lagrangian.hpp"
#include "hjump/randgraph.hpp"

namespace hjump {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Shortest decimal string that round-trips to the same double.
std::string fmt_double(double x);

Json to_json(const RPattern& p);
Json to_json(const Weighting& w);
Json to_json(const LagrangianResult& r);
Json to_json(const GridResult& r);
Json to_json(const StationaryPoint& pt);
Json to_json(const SupportEnumResult& r);
Json to_json(const CertificateReport& r);
Json to_json(const SparseGraphReport& r);
Json to_json(const TheoremGraphReport& r);
Json to_json(const SubgraphBoundReport& r);

// Common wrapper recording tool version, command and solver configuration.
Json report_envelope(const std::string& command, const SolverConfig& cfg);

}  // namespace hjump

#endif
