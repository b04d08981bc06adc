#pragma once

#include <map>
#include <vector>

#include "ffsg/ringelem.hpp"

namespace ffsg {

using XExp = std::vector<int>;  // exponents of x_1..x_nvars (Laurent)

// Multivariate Laurent polynomial over the coefficient field.
struct XPoly {
    int nvars = 0;
    std::map<XExp, RingElem> terms;

    explicit XPoly(int n = 0) : nvars(n) {}
    static XPoly constant(int n, RingElem c);
    static XPoly monomial(int n, const XExp& e, RingElem c);
    static XPoly variable(int n, int idx, int power = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const XExp& e, const RingElem& c);

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b);

    XPoly scaled(const RingElem& c) const;

    // substitute x_a -> c * x_b (a != b)
    XPoly substitute_var(int a, const RingElem& c, int b) const;
    // substitute x_a -> constant c
    XPoly substitute_const(int a, const RingElem& c) const;
    // x_i -> 1/x_i for all i
    XPoly invert_vars() const;
    // apply permutation: variable i gets exponent of perm[i]
    XPoly permuted(const std::vector<int>& perm) const;
    // apply a function to every coefficient (e.g. u-substitution, D)
    XPoly map_coeffs(const std::function<RingElem(const RingElem&)>& f) const;

    RingElem coeff(const XExp& e) const;
};

}  // namespace ffsg
