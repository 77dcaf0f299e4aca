#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fxp/emulation.hpp"

namespace fxp {

/// Defect classes a gcc-vs-correct divergence can fall into; anything
/// outside these is a red flag the caller must treat as a failure.
enum class DefectBucket {
    ConversionTruncation, // constants and conversions rounded down
    PromotionLoss,        // argument bits dropped by common-format promotion
    ResultTruncation,     // exact result truncated into the destination
};

std::string_view to_token(DefectBucket b);

struct FuzzConfig {
    std::uint64_t seed = 1;
    int count = 10000;
    std::vector<FixedFormat> formats;
    bool run_gcc = true; // also diff the gcc profile against correct
};

struct FuzzDivergence {
    std::string description; // one line: op, inputs, both raws
    DefectBucket bucket;
};

struct FuzzReport {
    int cases = 0;
    int oracle_mismatches = 0; // correct profile vs brute-force oracle
    int gcc_divergences = 0;   // gcc profile vs correct nearest-even
    int unbucketed = 0;
    std::map<DefectBucket, int> buckets;
    // max |emulated - exact| seen per lhs/rhs format pair, exact decimal
    std::map<std::string, std::string> max_error_by_format_pair;
    std::vector<FuzzDivergence> samples; // capped
    std::vector<std::string> oracle_mismatch_samples;

    bool clean() const { return oracle_mismatches == 0 && unbucketed == 0; }
};

FuzzReport fuzz(const FuzzConfig& config);

} // namespace fxp
