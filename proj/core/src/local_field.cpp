#include "torphi/local_field.hpp"

#include "torphi/error.hpp"

namespace torphi {

namespace {

void requireSameModel(const CoarseUnit& a, const CoarseUnit& b) {
    if (a.modulus() != b.modulus()) {
        throw ValidationError("coarse units from different field models (w = " + a.modulus().get_str() +
                              " vs w = " + b.modulus().get_str() + ")");
    }
}

}  // namespace

LocalFieldModel::LocalFieldModel(Integer p, Integer q, Integer w) : p_(std::move(p)), q_(std::move(q)), w_(std::move(w)) {
    if (!isPrime(p_)) throw ValidationError("residue characteristic p = " + p_.get_str() + " is not prime");
    Integer r = q_;
    if (r < p_) throw ValidationError("residue field size q = " + q_.get_str() + " is not a power of p");
    while (r % p_ == 0) r /= p_;
    if (r != 1) throw ValidationError("residue field size q = " + q_.get_str() + " is not a power of p");
    if (w_ < 1) throw ValidationError("torsion order w must be >= 1");
}

LocalFieldModel LocalFieldModel::padic(const Integer& p) {
    if (p == 2) return LocalFieldModel(p, p, 2);
    return LocalFieldModel(p, p, p - 1);
}

LocalFieldModel LocalFieldModel::widened(const Integer& k) const {
    if (k < 1) throw ValidationError("widening factor must be >= 1");
    return LocalFieldModel(p_, q_, w_ * k);
}

CoarseUnit::CoarseUnit(Integer w) : v_(0), t_(0), w_(std::move(w)) {
    if (w_ < 1) throw ValidationError("torsion order w must be >= 1");
}

CoarseUnit::CoarseUnit(Integer v, Integer t, Integer w, GenericExponents generic)
    : v_(std::move(v)), t_(std::move(t)), w_(std::move(w)) {
    if (w_ < 1) throw ValidationError("torsion order w must be >= 1");
    t_ = mod(t_, w_);
    for (auto& [name, e] : generic)
        if (e != 0) generic_.emplace(name, e);
}

std::string CoarseUnit::toString() const {
    std::string s = "(" + v_.get_str() + "," + t_.get_str();
    if (!generic_.empty()) {
        s += ";";
        bool first = true;
        for (const auto& [name, e] : generic_) {
            if (!first) s += "*";
            first = false;
            s += name;
            if (e != 1) s += "^" + e.get_str();
        }
    }
    return s + ")";
}

CoarseUnit unitMul(const CoarseUnit& a, const CoarseUnit& b) {
    requireSameModel(a, b);
    GenericExponents g = a.generic();
    for (const auto& [name, e] : b.generic()) g[name] += e;
    return CoarseUnit(a.valuation() + b.valuation(), a.torsion() + b.torsion(), a.modulus(), std::move(g));
}

CoarseUnit unitPow(const CoarseUnit& a, const Integer& n) {
    GenericExponents g;
    for (const auto& [name, e] : a.generic()) g.emplace(name, e * n);
    return CoarseUnit(a.valuation() * n, a.torsion() * n, a.modulus(), std::move(g));
}

CoarseUnit unitInverse(const CoarseUnit& a) { return unitPow(a, -1); }

std::vector<CoarseUnit> cthRoots(const CoarseUnit& x, const Integer& c) {
    if (c < 1) throw ValidationError("cthRoots: c must be >= 1");
    std::vector<CoarseUnit> roots;
    if (!mpz_divisible_p(x.valuation().get_mpz_t(), c.get_mpz_t())) return roots;
    GenericExponents g;
    for (const auto& [name, e] : x.generic()) {
        if (!mpz_divisible_p(e.get_mpz_t(), c.get_mpz_t())) return roots;
        g.emplace(name, e / c);
    }
    const Integer& w = x.modulus();
    // c*t' = t (mod w) is solvable iff gcd(c, w) | t; the solutions form one
    // coset of (w/d)Z/wZ.
    Integer d = gcd(c, w);
    if (!mpz_divisible_p(x.torsion().get_mpz_t(), d.get_mpz_t())) return roots;
    Integer wd = w / d;
    Integer base = 0;
    if (wd > 1) {
        Integer inv;
        Integer cd = mod(c / d, wd);
        mpz_invert(inv.get_mpz_t(), cd.get_mpz_t(), wd.get_mpz_t());
        base = mod((x.torsion() / d) * inv, wd);
    }
    Integer v = x.valuation() / c;
    for (Integer k = 0; k < d; ++k) roots.emplace_back(v, base + k * wd, w, g);
    return roots;
}

CoarseUnit changeTorsionGenerator(const CoarseUnit& x, const Integer& u) {
    if (gcd(u, x.modulus()) != 1) throw ValidationError("changeTorsionGenerator: u must be a unit modulo w");
    return CoarseUnit(x.valuation(), x.torsion() * u, x.modulus(), x.generic());
}

CoarseUnit widenUnit(const CoarseUnit& x, const Integer& k) {
    if (k < 1) throw ValidationError("widening factor must be >= 1");
    return CoarseUnit(x.valuation(), x.torsion() * k, x.modulus() * k, x.generic());
}

ExactRational makeRational(const Integer& num, const Integer& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    ExactRational r(num, den);
    r.canonicalize();
    return r;
}

Integer ordOfInteger(const Integer& x, const Integer& p) {
    if (x == 0) throw ValidationError("valuation of zero");
    if (p < 2) throw ValidationError("valuation at p < 2");
    Integer r = x;
    Integer k = 0;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        r /= p;
        ++k;
    }
    return k;
}

Integer ordOfRational(const ExactRational& x, const Integer& p) {
    if (x == 0) throw ValidationError("valuation of zero");
    return ordOfInteger(x.get_num(), p) - ordOfInteger(x.get_den(), p);
}

}  // namespace torphi
