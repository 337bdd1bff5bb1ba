#include "torphi_cli/commands.hpp"

#include "torphi/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace torphi;
using namespace torphi::cli;

namespace {

std::optional<Integer> optionalInteger(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parseInteger(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torphi: component groups of optimal quotients of toric abelian varieties"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    std::string analyzeBound;
    auto* a = app.add_subcommand("analyze", "Analyze a lattice document");
    a->add_option("path", analyze.path, "Lattice document (JSON)")->required();
    a->add_option("--bound", analyzeBound, "Enumeration bound for cocharacters (default g*max|V_ij|, or TORPHI_BOUND)");
    a->add_option("--format", analyze.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

    GlueOptions glue;
    std::string q1v, q1t, q2v, q2t, c;
    bool noGeneric = false;
    auto* g = app.add_subcommand("glue", "Glue two Tate curves along their c-torsion and emit the lattice");
    g->add_option("q1_v", q1v)->required();
    g->add_option("q1_t", q1t)->required();
    g->add_option("q2_v", q2v)->required();
    g->add_option("q2_t", q2t)->required();
    g->add_option("c", c)->required();
    g->add_option("--field", glue.field, "p,q,w")->required();
    g->add_option("--out", glue.outPath, "Write the document here instead of stdout");
    g->add_flag("--no-generic", noGeneric, "Use bare (v,t) periods; these are always dependent, so this fails");

    std::string prime = "5";
    auto* e = app.add_subcommand("example21", "Check the degree-2 map example");
    e->add_option("--prime", prime, "Odd prime p");

    SelftestOptions self;
    auto* s = app.add_subcommand("selftest", "Run the randomized property suite");
    s->add_option("--seed", self.seed, "Seed of the instance stream");
    s->add_option("--count", self.count, "Number of instances");
    s->add_option("--jobs", self.jobs, "Worker threads");
    s->add_flag("--inject-gram-fault", self.injectGramFault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version requests exit 0; usage errors are input errors.
        return app.exit(e) == 0 ? 0 : torphi::cli::kInputError;
    }

    int code = guarded(std::cerr, [&] {
        if (*a) {
            analyze.bound = optionalInteger(analyzeBound);
            return cmdAnalyze(analyze, std::cout, std::cerr);
        }
        if (*g) {
            glue.q1v = parseInteger(q1v);
            glue.q1t = parseInteger(q1t);
            glue.q2v = parseInteger(q2v);
            glue.q2t = parseInteger(q2t);
            glue.c = parseInteger(c);
            glue.generic = !noGeneric;
            return cmdGlue(glue, std::cout, std::cerr);
        }
        if (*e) return cmdExample21(parseInteger(prime), std::cout, std::cerr);
        return cmdSelftest(self, std::cout, std::cerr);
    });
    return code;
}
