#include "torphi_cli/commands.hpp"

#include "torphi/error.hpp"
#include "torphi/optimal_quotient.hpp"
#include "torphi/poly2z.hpp"
#include "torphi/random_instances.hpp"
#include "torphi/tate_construction.hpp"
#include "torphi_cli/document.hpp"
#include "torphi_cli/report.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

namespace torphi::cli {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ValidationError& e) {
        err << "invalid: " << e.what() << "\n";
        return kValidationError;
    } catch (const ConsistencyError& e) {
        err << "property failure: " << e.what() << "\n";
        return kPropertyFailure;
    }
}

std::optional<Integer> boundOverride(const std::optional<Integer>& explicitBound) {
    if (explicitBound) return explicitBound;
    if (const char* env = std::getenv("TORPHI_BOUND"); env && *env) {
        Integer b = parseInteger(env);
        if (b < 1) throw InputError("TORPHI_BOUND must be a positive integer");
        return b;
    }
    return std::nullopt;
}

int cmdAnalyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.format != "text" && opts.format != "machine")
            throw InputError("--format must be text or machine");
        LatticeDocument doc = readLatticeDocument(opts.path);
        PolarizedLattice p = doc.lattice();
        Integer bound = boundOverride(opts.bound).value_or(defaultEnumerationBound(p));
        AnalysisReport rep = analyzeDocument(doc, bound);
        out << (opts.format == "machine" ? toMachine(rep) : toText(rep));
        return static_cast<int>(kOk);
    });
}

namespace {

LocalFieldModel parseField(const std::string& spec) {
    std::vector<Integer> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parseInteger(item));
    if (parts.size() != 3) throw InputError("--field expects p,q,w");
    return LocalFieldModel(parts[0], parts[1], parts[2]);
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
    if (!f) throw InputError("write failed: " + path);
}

}  // namespace

int cmdGlue(const GlueOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LocalFieldModel field = parseField(opts.field);
        const Integer& w = field.torsionOrder();
        auto period = [&](const Integer& v, const Integer& t, const char* name) {
            if (t < 0 || t >= w) throw ValidationError(std::string(name) + ".t outside [0, w)");
            GenericExponents gen;
            if (opts.generic) gen[name] = 1;
            return CoarseUnit(v, t, w, gen);
        };
        const PolarizedLattice glued = buildGluedLattice(period(opts.q1v, opts.q1t, "q1"),
                                                         period(opts.q2v, opts.q2t, "q2"), opts.c, field);
        const std::string text = serializeLatticeDocument(documentFromLattice(glued));
        if (!opts.outPath.empty()) writeFile(opts.outPath, text);

        // Round trip: the emitted document must analyze back to the gluing.
        const LatticeDocument doc = parseLatticeDocument(text);
        if (serializeLatticeDocument(doc) != text) throw ConsistencyError("document does not re-serialize identically");
        const PolarizedLattice back = doc.lattice();
        const AnalysisReport rep = analyzeDocument(doc, defaultEnumerationBound(back));
        bool ok = rep.componentGroup == componentGroup(glued);
        for (const auto& s : rep.subvarieties) ok = ok && s.c == opts.c;
        if (opts.generic) ok = ok && rep.subvarieties.size() == 2;
        if (!ok) throw ConsistencyError("glued lattice does not analyze back to c = " + opts.c.get_str());

        if (opts.outPath.empty()) out << text;
        else out << "wrote " << opts.outPath << "\n";
        out << "Phi_J: " << rep.componentGroup.toString() << "\n";
        for (std::size_t k = 0; k < rep.subvarieties.size(); ++k) {
            const auto& s = rep.subvarieties[k];
            out << "E" << k + 1 << ": q_E = " << s.qE.toString() << ", Phi_E = " << s.phiE.toString()
                << ", c = " << s.c << ", "
                << (s.surjective ? std::string("pi_* surjective")
                                 : "pi_* NOT surjective, cokernel " + s.cokernel.toString())
                << "\n";
        }
        return static_cast<int>(kOk);
    });
}

int cmdExample21(const Integer& prime, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Example21Report rep = verifyExample21(prime);
        for (const auto& c : rep.checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.detail << "]\n";
        out << (rep.allPassed() ? "all checks passed" : "some checks FAILED") << " for p = " << prime << "\n";
        return static_cast<int>(rep.allPassed() ? kOk : kPropertyFailure);
    });
}

namespace {

struct InstanceResult {
    bool ok = true;
    std::string log;
};

Poly2Z randomPoly(InstanceRng& rng) {
    Poly2Z f;
    for (int k = 0; k < 4; ++k)
        f = f + Poly2Z::monomial(rng.range(-3, 3), static_cast<unsigned>(rng.range(0, 3)),
                                 static_cast<unsigned>(rng.range(0, 2)));
    return f;
}

void propertyCheck(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError(what);
}

// Every property below is a theorem; a violation is a bug (or the injected
// mutation).
void runInstance(std::uint64_t seed, std::size_t index, bool injectFault, InstanceResult& res) {
    InstanceRng rng(seed);
    const PolarizedLattice p = randomPolarizedLattice(rng);
    try {
        IntMatrix gram = p.gram();
        if (injectFault && index == 0) gram(0, 0) += 1;
        const FinAbGroup phi = componentGroup(p);
        propertyCheck(phi.order() && *phi.order() == abs(gram.determinant()), "#Phi_J = |det M|");

        const LatticeAnalysis an = analyzeLattice(p, 2);
        const LatticeAnalysis wide = analyzeLattice(widenLattice(p, 3), 2);
        propertyCheck(wide.componentGroup == an.componentGroup, "Phi_J stable under widening");
        propertyCheck(wide.subvarieties.size() == an.subvarieties.size(), "subvariety count stable under widening");
        for (std::size_t k = 0; k < an.subvarieties.size(); ++k) {
            const auto& a = an.subvarieties[k].invariants;
            const auto& b = wide.subvarieties[k].invariants;
            propertyCheck(a.c == b.c && a.m == b.m && a.n == b.n && a.r == b.r && a.ordQE == b.ordQE &&
                              a.congruenceNumber == b.congruenceNumber && a.cokernel == b.cokernel,
                          "invariants stable under widening");
        }

        const Integer k = rng.range(2, 4);
        const ToricHom mult = makeHom(p, p, k * IntMatrix::identity(p.rank()), k * IntMatrix::identity(p.rank()));
        for (const auto& s : an.subvarieties) {
            const ToricHom pi = quotientHom(p, s.subvariety);
            propertyCheck(sameComponentMap(inducedComponentMap(composeHom(pi, mult)),
                                           composeComponentMaps(inducedComponentMap(pi), inducedComponentMap(mult))),
                          "functoriality of pi_*");
        }

        const Integer c = 2 + Integer(static_cast<unsigned long>(index % 11));
        const LocalFieldModel field(13, 13, c);
        const TateCurve e = TateCurve::create(field, CoarseUnit(c, 0, c));
        const TorsionPoint P = TorsionPoint::create(e, c, rng.range(0, 12), rng.range(0, 12));
        const TorsionPoint Q = TorsionPoint::create(e, c, rng.range(0, 12), rng.range(0, 12));
        const TorsionPoint R = TorsionPoint::create(e, c, P.a + Q.a, P.b + Q.b);
        propertyCheck(weilPairing(P, P) == 0, "Weil pairing alternating");
        propertyCheck(mod(weilPairing(P, Q) + weilPairing(Q, P), c) == 0, "Weil pairing antisymmetric");
        const TorsionPoint S = TorsionPoint::create(e, c, rng.range(0, 12), rng.range(0, 12));
        propertyCheck(weilPairing(R, S) == mod(weilPairing(P, S) + weilPairing(Q, S), c), "Weil pairing bilinear");

        const Poly2Z f = randomPoly(rng), g = randomPoly(rng), h = randomPoly(rng);
        propertyCheck(f * (g + h) == f * g + f * h, "Poly2Z distributivity");
        propertyCheck((f * g) * h == f * (g * h), "Poly2Z associativity");
        const Integer xv = rng.range(-5, 5), pv = rng.range(-5, 5);
        propertyCheck((f * g).evaluate(xv, pv) == f.evaluate(xv, pv) * g.evaluate(xv, pv),
                      "Poly2Z evaluation is a ring map");
    } catch (const Error& e) {
        res.ok = false;
        res.log = "FAIL instance " + std::to_string(index) + " (seed " + std::to_string(seed) + "): " + e.what() +
                  "\ncounterexample document:\n" + serializeLatticeDocument(documentFromLattice(p));
    }
}

}  // namespace

int cmdSelftest(const SelftestOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.jobs == 0) throw InputError("--jobs must be positive");
        // Per-instance seeds come from one stream, so a run is reproducible
        // for any job count.
        InstanceRng master(opts.seed);
        std::vector<std::uint64_t> seeds(opts.count);
        for (auto& s : seeds) s = master.below(UINT64_MAX);
        std::vector<InstanceResult> results(opts.count);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < opts.count;)
                runInstance(seeds[i], i, opts.injectGramFault, results[i]);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < opts.jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        std::size_t failed = 0;
        for (const auto& r : results)
            if (!r.ok) {
                ++failed;
                out << r.log;
            }
        out << "selftest: " << opts.count - failed << "/" << opts.count << " instances passed (seed " << opts.seed
            << ")\n";
        return static_cast<int>(failed == 0 ? kOk : kPropertyFailure);
    });
}

}  // namespace torphi::cli
