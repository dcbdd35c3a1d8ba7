#pragma once

#include "plumbtop/io.hpp"

#include <string>
#include <vector>

namespace plumbtop {

struct ClaimResult {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReproReport {
    std::vector<ClaimResult> claims;
    bool all_pass() const;
};

// Recomputes the published explicit results from scratch.  Claim ids:
// T6.5 (lens characterization), P7.1/P7.2 (vanishing-zone structure of the
// example family), T7.3 (definiteness obstruction), T8.1 (Hirzebruch
// homology closed form), T8.2 (example-family homology).
ReproReport run_repro_suite();

Json repro_to_json(const ReproReport& r);
std::string repro_to_text(const ReproReport& r);

} // namespace plumbtop
