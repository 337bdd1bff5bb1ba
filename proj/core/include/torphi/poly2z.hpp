#pragma once

// Polynomials in x and a formal parameter p with integer coefficients.

#include "torphi/integer.hpp"

#include <map>
#include <string>
#include <utility>

namespace torphi {

class Poly2Z {
public:
    /// (deg_x, deg_p)
    using Monomial = std::pair<unsigned, unsigned>;

    Poly2Z() = default;
    Poly2Z(const Integer& constant);  // NOLINT: implicit promotion of constants is intended
    Poly2Z(long constant) : Poly2Z(Integer(constant)) {}  // NOLINT

    static Poly2Z x();
    static Poly2Z p();
    static Poly2Z monomial(const Integer& coeff, unsigned degX, unsigned degP);

    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    Integer coefficient(unsigned degX, unsigned degP) const;

    Poly2Z operator+(const Poly2Z& o) const;
    Poly2Z operator-(const Poly2Z& o) const;
    Poly2Z operator-() const;
    Poly2Z operator*(const Poly2Z& o) const;
    Poly2Z pow(unsigned n) const;

    Integer evaluate(const Integer& xv, const Integer& pv) const;
    /// Substitutes an integer for p, leaving a polynomial in x.
    Poly2Z substituteP(const Integer& pv) const;

    bool operator==(const Poly2Z&) const = default;

    /// Terms in decreasing (deg_x, deg_p) order, e.g. "2*x^2*p - p + 1".
    std::string toString() const;

private:
    void add(const Monomial& m, const Integer& c);
    std::map<Monomial, Integer> terms_;
};

}  // namespace torphi
