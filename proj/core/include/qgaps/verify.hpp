#pragma once

#include "qgaps/memo_table.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qgaps {

/// One verifiable identity. Entries whose statement pairs two companion
/// equations list both halves in clauses; each clause id is individually
/// resolvable by verify_identity.
struct IdentityDescriptor {
    std::string id;
    std::string statement;
    bool parameterized = false;          // takes a range of r values
    std::vector<std::string> clauses;    // sub-checks; == {id} for simple entries
    long default_n_max = 300;            // suggested verification range
};

struct IdentityMismatch {
    long n = 0;
    std::optional<int> r;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    long n_max = 0;
    std::vector<int> r_values;           // empty for unparameterized identities
    bool pass = false;
    std::optional<IdentityMismatch> first_mismatch;
    double elapsed_ms = 0.0;
};

/// The fixed identity registry (20 entries).
const std::vector<IdentityDescriptor>& identity_registry();

/// Checks one identity (or one clause of a paired entry) for all n <= n_max,
/// iterating n ascending then r ascending, stopping at the first mismatch.
/// r_set may only be supplied for parameterized identities; it defaults to
/// {1..6}. The special id "T0-corrupted-test-double" is a deliberately broken
/// recipe for exercising the failure path.
IdentityReport verify_identity(const std::string& id, long n_max,
                               const std::set<int>* r_set = nullptr,
                               MemoTable& table = default_table());

/// One-line summary, e.g. "T0 PASS n=0..300 r=1,2,3 (42.0 ms)".
std::string report_line(const IdentityReport& report);

/// Single JSON object for one report.
std::string report_json(const IdentityReport& report);

} // namespace qgaps
