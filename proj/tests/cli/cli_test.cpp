#include "torphi/error.hpp"
#include "torphi_cli/commands.hpp"
#include "torphi_cli/document.hpp"
#include "torphi_cli/report.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace torphi;
using namespace torphi::cli;

namespace {

std::string tmpPath(const std::string& name) {
    std::filesystem::create_directories(TORPHI_TEST_TMP);
    return std::string(TORPHI_TEST_TMP) + "/" + name;
}

std::string writeTmp(const std::string& name, const std::string& text) {
    const std::string path = tmpPath(name);
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

struct ProcessResult {
    int code;
    std::string out;
};

// Runs the installed binary through the shell; stderr is folded into out.
ProcessResult runBinary(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + TORPHI_BINARY + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kGlued = R"({
  "field": {"p": "13", "q": "13", "w": "4"},
  "rank": 2,
  "coords": [[{"v": "1", "t": "0", "generic": {"q1": "1"}}, {"v": "0", "t": "2"}],
             [{"v": "0", "t": "2"}, {"v": "1", "t": "0", "generic": {"q2": "1"}}]],
  "H": [["1", "0"], ["0", "1"]]
})";

std::string withReplaced(std::string text, const std::string& from, const std::string& to) {
    text.replace(text.find(from), from.size(), to);
    return text;
}

}  // namespace

TEST(LatticeDocument, ParsesGluedExample) {
    LatticeDocument doc = parseLatticeDocument(kGlued);
    EXPECT_EQ(doc.rank, 2u);
    EXPECT_EQ(doc.w, 4);
    EXPECT_EQ(componentGroup(doc.lattice()), componentGroup(fixtures::glued(1, 1, 2, 4)));
}

TEST(LatticeDocument, SyntaxErrorReportsPosition) {
    try {
        parseLatticeDocument("{\n  \"rank\": 2,\n  oops\n}");
        FAIL() << "expected an error";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(LatticeDocument, ShapeErrorsNameTheField) {
    try {
        parseLatticeDocument(withReplaced(kGlued, R"({"v": "0", "t": "2"}, {"v": "1")", R"({"t": "2"}, {"v": "1")"));
        FAIL() << "expected an error";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("coords[1][0].v"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parseLatticeDocument(withReplaced(kGlued, R"("rank": 2)", R"("rank": "two")")), InputError);
    EXPECT_THROW(parseLatticeDocument(withReplaced(kGlued, R"(["0", "1"]])", R"(["0"]])")), InputError);
}

TEST(LatticeDocument, TorsionOutOfRangeIsValidationError) {
    const std::string bad = withReplaced(kGlued, R"({"v": "0", "t": "2"}, {"v": "1")", R"({"v": "0", "t": "4"}, {"v": "1")");
    try {
        parseLatticeDocument(bad);
        FAIL() << "expected an error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("coords[1][0].t"), std::string::npos) << e.what();
    }
    const ProcessResult r = runBinary("analyze " + writeTmp("bad_t.json", bad));
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_NE(r.out.find("coords[1][0].t"), std::string::npos) << r.out;
}

TEST(LatticeDocument, AsymmetricTorsionIsRejected) {
    const std::string bad = withReplaced(kGlued, R"([{"v": "0", "t": "2"}, {"v": "1", "t": "0", "generic": {"q2")",
                                         R"([{"v": "0", "t": "1"}, {"v": "1", "t": "0", "generic": {"q2")");
    EXPECT_THROW(parseLatticeDocument(bad).lattice(), ValidationError);
}

TEST(LatticeDocument, CanonicalSerializationRoundTrips) {
    const std::string text = serializeLatticeDocument(parseLatticeDocument(kGlued));
    EXPECT_EQ(serializeLatticeDocument(parseLatticeDocument(text)), text);
    EXPECT_EQ(text, serializeLatticeDocument(documentFromLattice(fixtures::glued(1, 1, 2, 4))));
}

TEST(Report, MachineRoundTripIsByteIdentical) {
    for (const char* doc : {kGlued}) {
        AnalysisReport rep = analyzeDocument(parseLatticeDocument(doc), 2);
        const std::string machine = toMachine(rep);
        AnalysisReport back = parseMachineReport(machine);
        EXPECT_EQ(back, rep);
        EXPECT_EQ(toMachine(back), machine);
    }
    LatticeDocument d = documentFromLattice(fixtures::glued(2, 3, 3, 6));
    AnalysisReport rep = analyzeDocument(d, 3);
    EXPECT_EQ(toMachine(parseMachineReport(toMachine(rep))), toMachine(rep));
}

TEST(Report, TextAndMachineAgree) {
    AnalysisReport rep = analyzeDocument(parseLatticeDocument(kGlued), 2);
    const std::string text = toText(rep);
    EXPECT_NE(text.find("Phi_J: trivial"), std::string::npos);
    EXPECT_NE(text.find("  c = 2"), std::string::npos);
    EXPECT_NE(text.find("pi_* NOT surjective, cokernel Z/2"), std::string::npos);
    ASSERT_EQ(rep.subvarieties.size(), 2u);
    for (const auto& s : rep.subvarieties) {
        EXPECT_EQ(s.c, 2);
        EXPECT_EQ(s.phiE, FinAbGroup::cyclic(2));
        EXPECT_FALSE(s.surjective);
        EXPECT_EQ(s.cokernel, FinAbGroup::cyclic(2));
    }
    EXPECT_NE(toMachine(rep).find("\"format\": \"torphi-report/1\""), std::string::npos);
}

TEST(Report, RejectsMalformedMachineText) {
    EXPECT_THROW(parseMachineReport("{"), InputError);
    EXPECT_THROW(parseMachineReport(R"({"format": "other"})"), InputError);
}

TEST(Report, CheckReportCatchesTampering) {
    AnalysisReport rep = analyzeDocument(parseLatticeDocument(kGlued), 2);
    EXPECT_NO_THROW(checkReport(rep));
    rep.subvarieties[0].m += 1;
    EXPECT_THROW(checkReport(rep), ConsistencyError);
}

TEST(Report, EndomorphismDataReportsIndexCheck) {
    LatticeDocument doc = parseLatticeDocument(kGlued);
    doc.endomorphisms = {IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 0}}};
    doc.pairing = IntMatrix{{1, 1}, {2, 0}};
    AnalysisReport rep = analyzeDocument(doc, 2);
    ASSERT_EQ(rep.subvarieties.size(), 2u);
    const auto& s = rep.subvarieties[0];
    ASSERT_TRUE(s.indexCheck.has_value());
    ASSERT_TRUE(s.gekeler.has_value());
    if (s.lambdaE == IntVector{1, 0}) {
        EXPECT_EQ(s.indexCheck->status, "ok");
        EXPECT_EQ(s.indexCheck->index, 2);
        EXPECT_TRUE(s.indexCheck->divisibleByC);
        EXPECT_NE(s.gekeler->status, "certified");
    }
    EXPECT_EQ(toMachine(parseMachineReport(toMachine(rep))), toMachine(rep));
    const std::string path = writeTmp("with_t.json", serializeLatticeDocument(doc));
    const ProcessResult r = runBinary("analyze --format machine " + path);
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("index_check"), std::string::npos);
}

TEST(Report, NonCommutingEndomorphismsAreRejected) {
    LatticeDocument doc = parseLatticeDocument(kGlued);
    doc.endomorphisms = {IntMatrix::identity(2), IntMatrix{{0, 1}, {0, 0}}};
    EXPECT_THROW(analyzeDocument(doc, 2), ValidationError);
}

TEST(Glue, CounterexampleOutput) {
    std::ostringstream out, err;
    GlueOptions o{1, 0, 1, 0, 2, "13,13,4", "", true};
    EXPECT_EQ(cmdGlue(o, out, err), 0) << err.str();
    EXPECT_NE(out.str().find("Phi_J: trivial"), std::string::npos);
    EXPECT_NE(out.str().find("E1: q_E = (2,0;q1^2), Phi_E = Z/2, c = 2, pi_* NOT surjective, cokernel Z/2"),
              std::string::npos)
        << out.str();
}

TEST(Glue, WritesAnalyzableDocument) {
    const std::string path = tmpPath("glued_2_3_3.json");
    std::ostringstream out, err;
    GlueOptions o{2, 0, 3, 0, 3, "13,13,6", path, true};
    ASSERT_EQ(cmdGlue(o, out, err), 0) << err.str();
    AnalyzeOptions a{path, std::nullopt, "machine"};
    std::ostringstream aout;
    ASSERT_EQ(cmdAnalyze(a, aout, err), 0) << err.str();
    AnalysisReport rep = parseMachineReport(aout.str());
    EXPECT_EQ(rep.componentGroup, FinAbGroup::cyclic(6));
    ASSERT_EQ(rep.subvarieties.size(), 2u);
    for (const auto& s : rep.subvarieties) EXPECT_EQ(s.c, 3);
}

TEST(Glue, ExitCodes) {
    std::ostringstream out, err;
    EXPECT_EQ(cmdGlue({1, 0, 1, 0, 3, "13,13,4", "", true}, out, err), kValidationError);  // 3 does not divide 4
    EXPECT_EQ(cmdGlue({1, 0, 1, 0, 2, "13,13", "", true}, out, err), kInputError);
    EXPECT_EQ(cmdGlue({1, 0, 1, 0, 2, "12,12,4", "", true}, out, err), kValidationError);
    EXPECT_EQ(cmdGlue({1, 0, 1, 0, 2, "13,13,4", "", false}, out, err), kValidationError);
    EXPECT_EQ(runBinary("glue 1 0 1 0 2").code, 1);  // --field is required
}

TEST(Example21, ExitCodes) {
    std::ostringstream out, err;
    EXPECT_EQ(cmdExample21(5, out, err), 0);
    EXPECT_NE(out.str().find("all checks passed for p = 5"), std::string::npos);
    EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
    EXPECT_EQ(cmdExample21(2, out, err), kValidationError);
    EXPECT_EQ(runBinary("example21 --prime 7").code, 0);
    EXPECT_EQ(runBinary("example21 --prime 15").code, 2);
}

TEST(Analyze, MissingFileIsInputError) {
    const ProcessResult r = runBinary("analyze " + tmpPath("does-not-exist.json"));
    EXPECT_EQ(r.code, 1) << r.out;
}

TEST(Analyze, BoundFromEnvironment) {
    const std::string path = writeTmp("glued.json", kGlued);
    const ProcessResult def = runBinary("analyze --format machine " + path);
    const ProcessResult env = runBinary("analyze --format machine " + path, "TORPHI_BOUND=5");
    const ProcessResult flag = runBinary("analyze --format machine --bound 4 " + path, "TORPHI_BOUND=5");
    ASSERT_EQ(def.code, 0) << def.out;
    ASSERT_EQ(env.code, 0) << env.out;
    ASSERT_EQ(flag.code, 0) << flag.out;
    EXPECT_EQ(parseMachineReport(def.out).bound, 2);
    EXPECT_EQ(parseMachineReport(env.out).bound, 5);
    EXPECT_EQ(parseMachineReport(flag.out).bound, 4);
    EXPECT_EQ(parseMachineReport(env.out).subvarieties, parseMachineReport(def.out).subvarieties);
    EXPECT_EQ(runBinary("analyze " + path, "TORPHI_BOUND=zero").code, 1);
}

TEST(Selftest, DeterministicForSeedAndJobCount) {
    std::ostringstream a, b, c, err;
    EXPECT_EQ(cmdSelftest({7, 15, 1, false}, a, err), 0) << a.str();
    EXPECT_EQ(cmdSelftest({7, 15, 1, false}, b, err), 0);
    EXPECT_EQ(cmdSelftest({7, 15, 3, false}, c, err), 0);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str(), c.str());
    EXPECT_NE(a.str().find("15/15 instances passed"), std::string::npos);
}

TEST(Selftest, InjectedFaultIsReported) {
    std::ostringstream out, err;
    EXPECT_EQ(cmdSelftest({7, 5, 1, true}, out, err), kPropertyFailure);
    EXPECT_NE(out.str().find("FAIL instance 0"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find("#Phi_J = |det M|"), std::string::npos);
    EXPECT_NE(out.str().find("counterexample document"), std::string::npos);
    EXPECT_NE(out.str().find("4/5 instances passed"), std::string::npos);
    EXPECT_EQ(runBinary("selftest --count 3 --inject-gram-fault").code, 3);
}
