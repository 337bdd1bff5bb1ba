#include "torphi_cli/report.hpp"

#include "torphi/error.hpp"

#include <json.hpp>

#include <sstream>

namespace torphi::cli {

using nlohmann::json;

namespace {

void ensure(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("report inconsistent: " + what);
}

json vec(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json group(const FinAbGroup& g) {
    return {{"free_rank", std::to_string(g.freeRank())}, {"invariant_factors", vec(g.invariantFactors())}};
}

json unit(const CoarseUnit& u) {
    json gen = json::object();
    for (const auto& [name, x] : u.generic()) gen[name] = x.get_str();
    return {{"v", u.valuation().get_str()}, {"t", u.torsion().get_str()}, {"w", u.modulus().get_str()}, {"generic", gen}};
}

Integer num(const json& j) { return parseInteger(j.get<std::string>()); }

IntVector vecFrom(const json& j) {
    IntVector v;
    for (const auto& x : j) v.push_back(num(x));
    return v;
}

FinAbGroup groupFrom(const json& j) {
    IntVector orders = vecFrom(j.at("invariant_factors"));
    for (Integer k = num(j.at("free_rank")); k > 0; --k) orders.push_back(0);
    return FinAbGroup::fromCyclicOrders(orders);
}

CoarseUnit unitFrom(const json& j) {
    GenericExponents gen;
    for (const auto& [name, x] : j.at("generic").items()) gen[name] = num(x);
    return CoarseUnit(num(j.at("v")), num(j.at("t")), num(j.at("w")), gen);
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string groupLabel(const FinAbGroup& g) { return g.toString(); }

AnalysisReport analyzeDocument(const LatticeDocument& doc, const Integer& bound) {
    const PolarizedLattice p = doc.lattice();
    for (std::size_t k = 0; k < doc.endomorphisms.size(); ++k)
        if (!isEndomorphism(p, doc.endomorphisms[k]))
            throw ValidationError("endomorphisms[" + std::to_string(k) + "]: not an endomorphism of J");
    for (std::size_t a = 0; a < doc.endomorphisms.size(); ++a)
        for (std::size_t b = a + 1; b < doc.endomorphisms.size(); ++b)
            if (doc.endomorphisms[a] * doc.endomorphisms[b] != doc.endomorphisms[b] * doc.endomorphisms[a])
                throw ValidationError("endomorphisms[" + std::to_string(a) + "] and endomorphisms[" +
                                      std::to_string(b) + "] do not commute");

    const LatticeAnalysis an = analyzeLattice(p, bound);
    AnalysisReport rep;
    rep.p = doc.p;
    rep.q = doc.q;
    rep.w = doc.w;
    rep.rank = doc.rank;
    rep.bound = bound;
    rep.componentGroup = an.componentGroup;
    for (const auto& s : an.subvarieties) {
        SubvarietyRecord r;
        r.cocharacter = s.subvariety.cocharacter;
        r.lambdaE = s.subvariety.lambdaE;
        r.gammaCoords = s.subvariety.gammaCoords;
        r.qE = s.subvariety.qE;
        r.phiE = FinAbGroup::cyclic(s.invariants.ordQE);
        r.c = s.invariants.c;
        r.m = s.invariants.m;
        r.n = s.invariants.n;
        r.r = s.invariants.r;
        r.congruenceNumber = s.invariants.congruenceNumber;
        r.ordQE = s.invariants.ordQE;
        r.selfPairing = s.invariants.selfPairing;
        r.surjective = s.invariants.surjective;
        r.cokernel = s.invariants.cokernel;
        r.conditions = s.theorem.holds;
        if (!doc.endomorphisms.empty()) {
            try {
                IndexCheck ic = lemmaCIIIndexCheck(p, s.subvariety, doc.endomorphisms);
                r.indexCheck = IndexRecord{"ok", ic.index, ic.divisibleByC, ic.eigenvalues, ""};
            } catch (const ConsistencyError&) {
                throw;
            } catch (const ValidationError& e) {
                r.indexCheck = IndexRecord{"inapplicable", 0, false, {}, e.what()};
            }
        }
        if (doc.pairing) {
            try {
                PerfectPairingVerdict gv = gekelerCriterion(p, s.subvariety, doc.endomorphisms, *doc.pairing);
                r.gekeler = CriterionRecord{gv.certified ? "certified" : "inconclusive", gv.determinant,
                                            gv.denominatorInRing, gv.r, gv.note};
            } catch (const ConsistencyError&) {
                throw;
            } catch (const ValidationError& e) {
                r.gekeler = CriterionRecord{"inapplicable", 0, 0, 0, e.what()};
            }
        }
        rep.subvarieties.push_back(std::move(r));
    }
    checkReport(rep);
    return rep;
}

void checkReport(const AnalysisReport& rep) {
    for (std::size_t k = 0; k < rep.subvarieties.size(); ++k) {
        const SubvarietyRecord& s = rep.subvarieties[k];
        const std::string at = "subvariety " + std::to_string(k + 1) + ": ";
        ensure(s.c * s.m == s.ordQE, at + "c*m = ord(q_E)");
        ensure(s.c * s.c * s.selfPairing == s.n * s.ordQE, at + "c^2 <lambda_E,lambda_E> = n ord(q_E)");
        ensure(s.n == s.c * s.r, at + "n = c*r");
        ensure(s.congruenceNumber == s.r, at + "R_E = r");
        ensure(mpz_divisible_p(rep.w.get_mpz_t(), s.c.get_mpz_t()) != 0, at + "c | w");
        ensure(s.cokernel == FinAbGroup::cyclic(s.c), at + "coker(pi_*) = Z/c");
        ensure(s.surjective == (s.c == 1), at + "surjective iff c = 1");
        ensure(s.phiE == FinAbGroup::cyclic(s.ordQE), at + "Phi_E = Z/ord(q_E)");
        ensure(s.qE.valuation() == s.ordQE, at + "ord(q_E)");
        for (bool h : s.conditions) ensure(h == s.surjective, at + "surjectivity conditions agree");
        ensure(s.gammaCoords.size() == s.lambdaE.size(), at + "gamma shape");
        for (std::size_t i = 0; i < s.lambdaE.size(); ++i)
            ensure(s.gammaCoords[i] == s.c * s.lambdaE[i], at + "gamma = c * lambda_E");
        if (s.indexCheck && s.indexCheck->status == "ok") {
            ensure(s.indexCheck->divisibleByC ==
                       (mpz_divisible_p(s.indexCheck->index.get_mpz_t(), s.c.get_mpz_t()) != 0),
                   at + "index divisibility flag");
            ensure(s.indexCheck->index != 1 || s.c == 1, at + "index 1 forces c = 1");
        }
        if (s.gekeler && s.gekeler->status == "certified") ensure(s.c == 1, at + "certified surjective needs c = 1");
    }
}

std::string toMachine(const AnalysisReport& rep) {
    checkReport(rep);
    json subs = json::array();
    for (const auto& s : rep.subvarieties) {
        json conds = json::array();
        for (std::size_t k = 0; k < 7; ++k) conds.push_back({{"name", TheoremReport::kNames[k]}, {"holds", s.conditions[k]}});
        json j = {
            {"cocharacter", vec(s.cocharacter)},
            {"lambda_E", vec(s.lambdaE)},
            {"gamma", vec(s.gammaCoords)},
            {"q_E", unit(s.qE)},
            {"phi_E", group(s.phiE)},
            {"invariants",
             {{"c", s.c.get_str()},
              {"m", s.m.get_str()},
              {"n", s.n.get_str()},
              {"r", s.r.get_str()},
              {"R_E", s.congruenceNumber.get_str()},
              {"ord_q_E", s.ordQE.get_str()},
              {"self_pairing", s.selfPairing.get_str()},
              {"surjective", s.surjective},
              {"cokernel", group(s.cokernel)}}},
            {"conditions", conds},
        };
        if (s.gekeler)
            j["perfect_pairing_criterion"] = {{"status", s.gekeler->status},
                                              {"determinant", s.gekeler->determinant.get_str()},
                                              {"denominator_in_T", s.gekeler->denominator.get_str()},
                                              {"r", s.gekeler->r.get_str()},
                                              {"note", s.gekeler->note}};
        if (s.indexCheck)
            j["index_check"] = {{"status", s.indexCheck->status},
                                {"index", s.indexCheck->index.get_str()},
                                {"divisible_by_c", s.indexCheck->divisibleByC},
                                {"eigenvalues", vec(s.indexCheck->eigenvalues)},
                                {"note", s.indexCheck->note}};
        subs.push_back(j);
    }
    json root = {
        {"format", "torphi-report/1"},
        {"field", {{"p", rep.p.get_str()}, {"q", rep.q.get_str()}, {"w", rep.w.get_str()}}},
        {"rank", std::to_string(rep.rank)},
        {"enumeration_bound", rep.bound.get_str()},
        {"phi_J", group(rep.componentGroup)},
        {"subvarieties", subs},
    };
    return root.dump(2) + "\n";
}

AnalysisReport parseMachineReport(std::string_view text) {
    AnalysisReport rep;
    try {
        json root = json::parse(text);
        if (root.at("format") != "torphi-report/1") throw InputError("unknown report format");
        rep.p = num(root.at("field").at("p"));
        rep.q = num(root.at("field").at("q"));
        rep.w = num(root.at("field").at("w"));
        rep.rank = num(root.at("rank")).get_ui();
        rep.bound = num(root.at("enumeration_bound"));
        rep.componentGroup = groupFrom(root.at("phi_J"));
        for (const auto& j : root.at("subvarieties")) {
            SubvarietyRecord s;
            s.cocharacter = vecFrom(j.at("cocharacter"));
            s.lambdaE = vecFrom(j.at("lambda_E"));
            s.gammaCoords = vecFrom(j.at("gamma"));
            s.qE = unitFrom(j.at("q_E"));
            s.phiE = groupFrom(j.at("phi_E"));
            const json& inv = j.at("invariants");
            s.c = num(inv.at("c"));
            s.m = num(inv.at("m"));
            s.n = num(inv.at("n"));
            s.r = num(inv.at("r"));
            s.congruenceNumber = num(inv.at("R_E"));
            s.ordQE = num(inv.at("ord_q_E"));
            s.selfPairing = num(inv.at("self_pairing"));
            s.surjective = inv.at("surjective").get<bool>();
            s.cokernel = groupFrom(inv.at("cokernel"));
            const json& conds = j.at("conditions");
            if (conds.size() != 7) throw InputError("conditions: expected 7 entries");
            for (std::size_t k = 0; k < 7; ++k) s.conditions[k] = conds[k].at("holds").get<bool>();
            if (auto it = j.find("perfect_pairing_criterion"); it != j.end())
                s.gekeler = CriterionRecord{it->at("status").get<std::string>(), num(it->at("determinant")),
                                            num(it->at("denominator_in_T")), num(it->at("r")),
                                            it->at("note").get<std::string>()};
            if (auto it = j.find("index_check"); it != j.end())
                s.indexCheck = IndexRecord{it->at("status").get<std::string>(), num(it->at("index")),
                                           it->at("divisible_by_c").get<bool>(), vecFrom(it->at("eigenvalues")),
                                           it->at("note").get<std::string>()};
            rep.subvarieties.push_back(std::move(s));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
    checkReport(rep);
    return rep;
}

std::string toText(const AnalysisReport& rep) {
    checkReport(rep);
    std::ostringstream os;
    os << "field: p = " << rep.p << ", q = " << rep.q << ", w = " << rep.w << "\n";
    os << "rank: " << rep.rank << "\n";
    os << "enumeration bound: " << rep.bound << "\n";
    os << "Phi_J: " << rep.componentGroup.toString() << "\n";
    os << "elliptic subvarieties: " << rep.subvarieties.size() << "\n";
    for (std::size_t k = 0; k < rep.subvarieties.size(); ++k) {
        const auto& s = rep.subvarieties[k];
        os << "\nE" << k + 1 << "\n";
        os << "  cocharacter: " << toString(s.cocharacter) << "\n";
        os << "  lambda_E: " << toString(s.lambdaE) << "\n";
        os << "  q_E: " << s.qE.toString() << "\n";
        os << "  Phi_E: " << s.phiE.toString() << "\n";
        os << "  c = " << s.c << "\n";
        os << "  m = " << s.m << "\n";
        os << "  n = " << s.n << "\n";
        os << "  r = " << s.r << "\n";
        os << "  R_E = " << s.congruenceNumber << "\n";
        os << "  ord(q_E) = " << s.ordQE << "\n";
        os << "  <lambda_E,lambda_E> = " << s.selfPairing << "\n";
        if (s.surjective)
            os << "  pi_* surjective\n";
        else
            os << "  pi_* NOT surjective, cokernel " << s.cokernel.toString() << "\n";
        os << "  conditions:\n";
        for (std::size_t i = 0; i < 7; ++i)
            os << "    [" << (s.conditions[i] ? "x" : " ") << "] " << TheoremReport::kNames[i] << "\n";
        if (s.indexCheck) {
            if (s.indexCheck->status == "ok")
                os << "  index [lambda_E^perp : I_E Lambda] = " << s.indexCheck->index
                   << ", divisible by c: " << yesNo(s.indexCheck->divisibleByC) << "\n";
            else
                os << "  index check inapplicable: " << s.indexCheck->note << "\n";
        }
        if (s.gekeler) os << "  perfect pairing criterion: " << s.gekeler->status << " (" << s.gekeler->note << ")\n";
    }
    return os.str();
}

}  // namespace torphi::cli
