#pragma once

#include "torphi/integer.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace torphi::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kValidationError = 2, kPropertyFailure = 3 };

/// Runs body, mapping library errors onto exit codes and printing them to err.
int guarded(std::ostream& err, const std::function<int()>& body);

/// Explicit value, else TORPHI_BOUND from the environment, else nullopt.
std::optional<Integer> boundOverride(const std::optional<Integer>& explicitBound);

struct AnalyzeOptions {
    std::string path;
    std::optional<Integer> bound;
    std::string format = "text";
};
int cmdAnalyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

struct GlueOptions {
    Integer q1v, q1t, q2v, q2t, c;
    std::string field;  ///< "p,q,w"
    std::string outPath;
    bool generic = true;
};
int cmdGlue(const GlueOptions& opts, std::ostream& out, std::ostream& err);

int cmdExample21(const Integer& prime, std::ostream& out, std::ostream& err);

struct SelftestOptions {
    std::uint64_t seed = 20240601;
    std::size_t count = 50;
    unsigned jobs = 1;
    bool injectGramFault = false;  ///< test-only mutation hook
};
int cmdSelftest(const SelftestOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace torphi::cli
