#include "ffsg/xpoly.hpp"

#include <functional>
#include <stdexcept>

namespace ffsg {

XPoly XPoly::constant(int n, RingElem c) {
    XPoly p(n);
    if (!c.is_zero()) p.terms.emplace(XExp(n, 0), std::move(c));
    return p;
}

XPoly XPoly::monomial(int n, const XExp& e, RingElem c) {
    XPoly p(n);
    if (!c.is_zero()) p.terms.emplace(e, std::move(c));
    return p;
}

XPoly XPoly::variable(int n, int idx, int power) {
    XExp e(n, 0);
    e.at(idx) = power;
    return monomial(n, e, RingElem(1));
}

void XPoly::add_term(const XExp& e, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

XPoly XPoly::operator-() const {
    XPoly r(nvars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("XPoly: mismatched nvars");
    XPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("XPoly: mismatched nvars");
    XPoly r(a.nvars);
    XExp e(a.nvars);
    std::map<XExp, std::vector<RingElem>> acc;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            acc[e].push_back(ca * cb);
        }
    for (auto& [ee, parts] : acc) {
        RingElem c = parts.size() == 1 ? std::move(parts[0]) : RingElem::sum(parts);
        if (!c.is_zero()) r.terms.emplace(ee, std::move(c));
    }
    return r;
}

bool operator==(const XPoly& a, const XPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
}

XPoly XPoly::scaled(const RingElem& c) const {
    XPoly r(nvars);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms) r.terms.emplace(e, t * c);
    return r;
}

XPoly XPoly::substitute_var(int a, const RingElem& c, int b) const {
    XPoly r(nvars);
    XExp e(nvars);
    for (const auto& [ea, t] : terms) {
        e = ea;
        int k = e[a];
        e[a] = 0;
        e[b] += k;
        r.add_term(e, t * c.pow(k));
    }
    return r;
}

XPoly XPoly::substitute_const(int a, const RingElem& c) const {
    XPoly r(nvars);
    XExp e(nvars);
    for (const auto& [ea, t] : terms) {
        e = ea;
        int k = e[a];
        e[a] = 0;
        r.add_term(e, t * c.pow(k));
    }
    return r;
}

XPoly XPoly::invert_vars() const {
    XPoly r(nvars);
    XExp e(nvars);
    for (const auto& [ea, t] : terms) {
        for (int i = 0; i < nvars; ++i) e[i] = -ea[i];
        r.add_term(e, t);
    }
    return r;
}

XPoly XPoly::permuted(const std::vector<int>& perm) const {
    XPoly r(nvars);
    XExp e(nvars);
    for (const auto& [ea, t] : terms) {
        for (int i = 0; i < nvars; ++i) e[i] = ea[perm[i]];
        r.add_term(e, t);
    }
    return r;
}

XPoly XPoly::map_coeffs(const std::function<RingElem(const RingElem&)>& f) const {
    XPoly r(nvars);
    for (const auto& [e, t] : terms) r.add_term(e, f(t));
    return r;
}

RingElem XPoly::coeff(const XExp& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? RingElem(0) : it->second;
}

}  // namespace ffsg
