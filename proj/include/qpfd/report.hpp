#ifndef QPFD_REPORT_HPP
#define QPFD_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qpfd/registry.hpp"

namespace qpfd {

// Machine report: {"version": 1, "config": {...}, "results": [...],
// "summary": {...}}. Key order is fixed so emitted JSON round-trips
// byte-identically; per-result timings are omitted (elapsed time lives
// only in the summary).
nlohmann::ordered_json report_json(const RunConfig& config,
                                   const std::vector<IdentityReport>& reports,
                                   const RunSummary& summary);

std::string render_report_text(const RunConfig& config,
                               const std::vector<IdentityReport>& reports,
                               const RunSummary& summary);

nlohmann::ordered_json catalog_json();

std::string render_catalog_text();

}  // namespace qpfd

#endif  // QPFD_REPORT_HPP
