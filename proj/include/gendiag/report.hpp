#pragma once

#include <string>

#include "gendiag/verify.hpp"

namespace gendiag {

/// JSON documents with the fixed schema
/// {command, parameters, results, failures}.
std::string poset_report_json(const PosetReport& report);
std::string audit_report_json(const AuditReport& report);

}  // namespace gendiag
