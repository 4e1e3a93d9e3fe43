#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fgeom/theorems.hpp"

namespace fgeom::cli {

inline constexpr const char* kVersion = "0.1.0";

// One check plus optional dump payloads rendered into the details object.
struct CheckEntry {
    VerificationReport report;
    std::vector<std::string> items;  // flat listing (points, labels)
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;  // keyed rows
};

// Machine-readable document: version, params {subcommand, n, d, q},
// checks [{name, pass, details, witness?}], pass.
struct ReportDocument {
    std::vector<std::pair<std::string, Detail>> params;
    std::vector<CheckEntry> checks;

    bool pass() const {
        for (const CheckEntry& c : checks)
            if (!c.report.pass) return false;
        return true;
    }
};

// Stable key order, UTF-8, newline-terminated; byte-identical for
// identical documents.
std::string render_json(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);

// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
// parameter error (nothing was verified).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgeom::cli
