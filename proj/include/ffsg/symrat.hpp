#pragma once

#include <functional>
#include <map>

#include "ffsg/xpoly.hpp"

namespace ffsg {

// Denominator factor (x_i + sign*x_j) with i < j, sign in {+1,-1}.
struct DenFactor {
    int i = 0, j = 0, sign = 1;
    friend bool operator<(const DenFactor& a, const DenFactor& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.sign < b.sign;
    }
    friend bool operator==(const DenFactor& a, const DenFactor& b) {
        return a.i == b.i && a.j == b.j && a.sign == b.sign;
    }
};

// Rational function num / prod (x_i + s x_j)^e, kept reduced: no listed factor
// divides the numerator while its exponent is positive.
struct SymRat {
    int nvars = 0;
    XPoly num;
    std::map<DenFactor, int> den;

    explicit SymRat(int n = 0) : nvars(n), num(n) {}
    static SymRat from_poly(XPoly p);
    static SymRat constant(int n, RingElem c) { return from_poly(XPoly::constant(n, std::move(c))); }

    bool is_zero() const { return num.is_zero(); }

    SymRat operator-() const;
    friend SymRat operator+(const SymRat& a, const SymRat& b);
    friend SymRat operator-(const SymRat& a, const SymRat& b);
    friend SymRat operator*(const SymRat& a, const SymRat& b);
    friend bool operator==(const SymRat& a, const SymRat& b);

    SymRat scaled(const RingElem& c) const;

    // multiply by 1/(x_i + s x_j); canonicalizes index order
    SymRat div_binomial(int i, int j, int sign) const;
    // multiply by the binomial (x_i + s x_j)
    SymRat mul_binomial(int i, int j, int sign) const;

    void reduce();

    // full denominator as an expanded polynomial
    XPoly den_poly() const;

    // x -> 1/x on all variables (stays in the representable family)
    SymRat invert_vars() const;
    // coefficient-wise map (u-substitutions, specialization, derivative)
    SymRat map_coeffs(const std::function<RingElem(const RingElem&)>& f) const;
    // check invariance under swapping variables a,b
    bool symmetric_under_swap(int a, int b) const;

    // Residue at x_a = -s*x_b of a simple pole factor (a<b form must exist in den):
    // returns (num / remaining_den) evaluated at x_a -> -s x_b, as a SymRat in the
    // remaining variables (variable a keeps slot, exponent folded into b).
    SymRat residue_at(int a, int b, int sign) const;
};

// divisibility helpers on XPoly
bool divisible_by_binomial(const XPoly& p, int i, int j, int sign);
XPoly divide_by_binomial(const XPoly& p, int i, int j, int sign);

}  // namespace ffsg
