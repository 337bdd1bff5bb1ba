#pragma once

#include "torphi/optimal_quotient.hpp"
#include "torphi_cli/document.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace torphi::cli {

struct CriterionRecord {
    std::string status;  ///< "certified", "inconclusive" or "inapplicable"
    Integer determinant, denominator, r;
    std::string note;
    bool operator==(const CriterionRecord&) const = default;
};

struct IndexRecord {
    std::string status;  ///< "ok" or "inapplicable"
    Integer index;
    bool divisibleByC = false;
    IntVector eigenvalues;
    std::string note;
    bool operator==(const IndexRecord&) const = default;
};

struct SubvarietyRecord {
    IntVector cocharacter, lambdaE, gammaCoords;
    CoarseUnit qE;
    FinAbGroup phiE;
    Integer c, m, n, r, congruenceNumber, ordQE, selfPairing;
    bool surjective = false;
    FinAbGroup cokernel;
    std::array<bool, 7> conditions{};
    std::optional<CriterionRecord> gekeler;
    std::optional<IndexRecord> indexCheck;
    bool operator==(const SubvarietyRecord&) const = default;
};

struct AnalysisReport {
    Integer p, q, w;
    std::size_t rank = 0;
    Integer bound;
    FinAbGroup componentGroup;
    std::vector<SubvarietyRecord> subvarieties;
    bool operator==(const AnalysisReport&) const = default;
};

/// Runs the full analysis of a document. T-data preconditions that fail for
/// one subvariety (e not in T (x) Q, lambda_E not an eigenvector) are
/// recorded as "inapplicable"; global T-data errors raise ValidationError.
AnalysisReport analyzeDocument(const LatticeDocument& doc, const Integer& bound);

/// Re-checks the asserted identities; ConsistencyError on a violation.
void checkReport(const AnalysisReport& rep);

/// Canonical JSON (sorted keys, decimal-string integers, two-space indent).
std::string toMachine(const AnalysisReport& rep);
AnalysisReport parseMachineReport(std::string_view text);
std::string toText(const AnalysisReport& rep);

std::string groupLabel(const FinAbGroup& g);

}  // namespace torphi::cli
