#include "torphi/poly2z.hpp"

namespace torphi {

Poly2Z::Poly2Z(const Integer& constant) { add({0, 0}, constant); }

Poly2Z Poly2Z::x() { return monomial(1, 1, 0); }
Poly2Z Poly2Z::p() { return monomial(1, 0, 1); }

Poly2Z Poly2Z::monomial(const Integer& coeff, unsigned degX, unsigned degP) {
    Poly2Z r;
    r.add({degX, degP}, coeff);
    return r;
}

void Poly2Z::add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer Poly2Z::coefficient(unsigned degX, unsigned degP) const {
    auto it = terms_.find({degX, degP});
    return it == terms_.end() ? Integer(0) : it->second;
}

Poly2Z Poly2Z::operator+(const Poly2Z& o) const {
    Poly2Z r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

Poly2Z Poly2Z::operator-() const {
    Poly2Z r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly2Z Poly2Z::operator-(const Poly2Z& o) const { return *this + (-o); }

Poly2Z Poly2Z::operator*(const Poly2Z& o) const {
    Poly2Z r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    return r;
}

Poly2Z Poly2Z::pow(unsigned n) const {
    Poly2Z result(1), base = *this;
    while (n) {
        if (n & 1U) result = result * base;
        base = base * base;
        n >>= 1U;
    }
    return result;
}

Integer Poly2Z::evaluate(const Integer& xv, const Integer& pv) const {
    Integer sum = 0;
    for (const auto& [m, c] : terms_) {
        Integer a, b;
        mpz_pow_ui(a.get_mpz_t(), xv.get_mpz_t(), m.first);
        mpz_pow_ui(b.get_mpz_t(), pv.get_mpz_t(), m.second);
        sum += c * a * b;
    }
    return sum;
}

Poly2Z Poly2Z::substituteP(const Integer& pv) const {
    Poly2Z r;
    for (const auto& [m, c] : terms_) {
        Integer b;
        mpz_pow_ui(b.get_mpz_t(), pv.get_mpz_t(), m.second);
        r.add({m.first, 0}, c * b);
    }
    return r;
}

std::string Poly2Z::toString() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string vars;
        auto factor = [&](const char* name, unsigned d) {
            if (d == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (d > 1) vars += "^" + std::to_string(d);
        };
        factor("x", m.first);
        factor("p", m.second);
        if (vars.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += vars;
        else
            out += mag.get_str() + "*" + vars;
    }
    return out;
}

}  // namespace torphi
