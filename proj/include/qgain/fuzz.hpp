#ifndef QGAIN_FUZZ_HPP
#define QGAIN_FUZZ_HPP

#include <string>
#include <vector>

#include "qgain/rng.hpp"

namespace qgain {

struct FuzzOptions {
    std::string suite = "all"; // "lemmas", "bounds", or "all"
    int count = 100;           // instances per property
    Seed seed = 1;
    int max_n = 12; // largest instance size the generators may draw
};

struct FuzzFailure {
    std::string property;
    int index = 0;        // instance index within the property
    std::string detail;   // what went wrong
    std::string artifact; // JSON text reproducing the instance
    std::string artifact_kind; // "graph", "matrix", or "seed"
};

struct PropertyTally {
    std::string property;
    int passed = 0;
    int failed = 0;
};

struct FuzzReport {
    std::vector<PropertyTally> tallies;
    std::vector<FuzzFailure> failures; // ordered by (property, index)

    bool ok() const { return failures.empty(); }
};

/// Runs every property of the chosen suite on `count` independently seeded
/// instances each. Instances run in parallel when OpenMP is available;
/// the report is aggregated in seed order either way, so identical options
/// give identical reports.
FuzzReport run_fuzz(const FuzzOptions& opt);

/// Writes each failure's artifact under dir (at most `limit` files per
/// property) and returns the paths.
std::vector<std::string> dump_failures(const FuzzReport& report, const std::string& dir,
                                       int limit = 5);

std::vector<std::string> suite_names();

} // namespace qgain

#endif
