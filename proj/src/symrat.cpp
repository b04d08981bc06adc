#include "ffsg/symrat.hpp"

#include <stdexcept>

namespace ffsg {

bool divisible_by_binomial(const XPoly& p, int i, int j, int sign) {
    // substitute x_i -> -sign * x_j and test for zero
    return p.substitute_var(i, RingElem(-sign), j).is_zero();
}

XPoly divide_by_binomial(const XPoly& p, int i, int j, int sign) {
    XPoly r = p, q(p.nvars);
    long guard = 0;
    const long cap = 4096 + 64 * (long)p.terms.size() * (long)p.terms.size();
    while (!r.is_zero()) {
        if (++guard > cap) throw std::domain_error("divide_by_binomial: not divisible");
        auto best = r.terms.begin();
        for (auto it = r.terms.begin(); it != r.terms.end(); ++it)
            if (it->first[i] > best->first[i]) best = it;
        XExp e = best->first;
        RingElem c = best->second;
        e[i] -= 1;
        q.add_term(e, c);
        // r -= c x^e (x_i + s x_j)
        XExp e1 = e, e2 = e;
        e1[i] += 1;
        e2[j] += 1;
        r.add_term(e1, -c);
        r.add_term(e2, c.is_zero() ? c : -(RingElem(sign) * c));
    }
    return q;
}

SymRat SymRat::from_poly(XPoly p) {
    SymRat r(p.nvars);
    r.num = std::move(p);
    return r;
}

SymRat SymRat::operator-() const {
    SymRat r = *this;
    r.num = -r.num;
    return r;
}

SymRat SymRat::scaled(const RingElem& c) const {
    SymRat r = *this;
    r.num = r.num.scaled(c);
    if (r.num.is_zero()) r.den.clear();
    return r;
}

void SymRat::reduce() {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den.begin(); it != den.end();) {
            while (it->second > 0 && divisible_by_binomial(num, it->first.i, it->first.j, it->first.sign)) {
                num = divide_by_binomial(num, it->first.i, it->first.j, it->first.sign);
                it->second -= 1;
                changed = true;
            }
            if (it->second == 0)
                it = den.erase(it);
            else
                ++it;
        }
    }
}

SymRat SymRat::mul_binomial(int i, int j, int sign) const {
    SymRat r = *this;
    if (i == j) {
        if (sign < 0) {
            r.num = XPoly(nvars);
            r.den.clear();
            return r;
        }
        XExp e(nvars, 0);
        e[i] = 1;
        r.num = r.num * XPoly::monomial(nvars, e, RingElem(2));
        r.reduce();
        return r;
    }
    int a = i, b = j, s = sign;
    RingElem scalar(1);
    if (a > b) {
        std::swap(a, b);
        if (s < 0) scalar = RingElem(-1);  // (x_i - x_j) = -(x_j - x_i)
    }
    auto it = r.den.find({a, b, s});
    if (it != r.den.end()) {
        if (--it->second == 0) r.den.erase(it);
        r.num = r.num.scaled(scalar);
        return r;
    }
    XExp e1(nvars, 0), e2(nvars, 0);
    e1[a] = 1;
    e2[b] = 1;
    XPoly bin = XPoly::monomial(nvars, e1, RingElem(1)) + XPoly::monomial(nvars, e2, RingElem(s));
    r.num = (r.num * bin).scaled(scalar);
    return r;
}

SymRat SymRat::div_binomial(int i, int j, int sign) const {
    SymRat r = *this;
    if (r.is_zero()) return r;
    if (i == j) {
        if (sign < 0) throw std::domain_error("div_binomial: (x_i - x_i) is zero");
        // divide by 2 x_i
        XExp e(nvars, 0);
        e[i] = -1;
        r.num = r.num * XPoly::monomial(nvars, e, RingElem(1) / RingElem(2));
        return r;
    }
    int a = i, b = j, s = sign;
    if (a > b) {
        std::swap(a, b);
        if (s < 0) r.num = r.num.scaled(RingElem(-1));
    }
    if (divisible_by_binomial(r.num, a, b, s)) {
        r.num = divide_by_binomial(r.num, a, b, s);
        return r;
    }
    r.den[{a, b, s}] += 1;
    return r;
}

XPoly SymRat::den_poly() const {
    XPoly d = XPoly::constant(nvars, RingElem(1));
    for (const auto& [f, e] : den) {
        XExp e1(nvars, 0), e2(nvars, 0);
        e1[f.i] = 1;
        e2[f.j] = 1;
        XPoly bin = XPoly::monomial(nvars, e1, RingElem(1)) + XPoly::monomial(nvars, e2, RingElem(f.sign));
        for (int k = 0; k < e; ++k) d = d * bin;
    }
    return d;
}

SymRat operator+(const SymRat& a, const SymRat& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("SymRat: mismatched nvars");
    SymRat r(a.nvars);
    // common denominator
    r.den = a.den;
    for (const auto& [f, e] : b.den) {
        auto it = r.den.find(f);
        if (it == r.den.end())
            r.den[f] = e;
        else
            it->second = std::max(it->second, e);
    }
    auto lift = [&](const SymRat& s) {
        XPoly p = s.num;
        for (const auto& [f, e] : r.den) {
            int have = 0;
            auto it = s.den.find(f);
            if (it != s.den.end()) have = it->second;
            for (int k = have; k < e; ++k) {
                XExp e1(r.nvars, 0), e2(r.nvars, 0);
                e1[f.i] = 1;
                e2[f.j] = 1;
                XPoly bin = XPoly::monomial(r.nvars, e1, RingElem(1)) +
                            XPoly::monomial(r.nvars, e2, RingElem(f.sign));
                p = p * bin;
            }
        }
        return p;
    };
    r.num = lift(a) + lift(b);
    if (r.num.is_zero())
        r.den.clear();
    else
        r.reduce();
    return r;
}

SymRat operator-(const SymRat& a, const SymRat& b) { return a + (-b); }

SymRat operator*(const SymRat& a, const SymRat& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("SymRat: mismatched nvars");
    SymRat r(a.nvars);
    r.num = a.num * b.num;
    if (r.num.is_zero()) return r;
    r.den = a.den;
    for (const auto& [f, e] : b.den) r.den[f] += e;
    r.reduce();
    return r;
}

bool operator==(const SymRat& a, const SymRat& b) {
    if (a.nvars != b.nvars) return false;
    if (a.num == b.num && a.den == b.den) return true;
    return (a - b).is_zero();
}

SymRat SymRat::invert_vars() const {
    SymRat r(nvars);
    r.num = num.invert_vars();
    for (const auto& [f, e] : den) {
        r.den[f] = e;
        XExp m(nvars, 0);
        m[f.i] = e;
        XExp m2(nvars, 0);
        m2[f.j] = e;
        RingElem c = (f.sign < 0 && e % 2 == 1) ? RingElem(-1) : RingElem(1);
        XPoly mono = XPoly::monomial(nvars, m, c) * XPoly::monomial(nvars, m2, RingElem(1));
        r.num = r.num * mono;
    }
    r.reduce();
    return r;
}

SymRat SymRat::map_coeffs(const std::function<RingElem(const RingElem&)>& f) const {
    SymRat r = *this;
    r.num = r.num.map_coeffs(f);
    if (r.num.is_zero())
        r.den.clear();
    else
        r.reduce();
    return r;
}

bool SymRat::symmetric_under_swap(int a, int b) const {
    std::vector<int> perm(nvars);
    for (int i = 0; i < nvars; ++i) perm[i] = i;
    std::swap(perm[a], perm[b]);
    // build swapped SymRat
    SymRat s(nvars);
    s.num = num.permuted(perm);
    for (auto [f, e] : den) {
        int i = (f.i == a) ? b : (f.i == b ? a : f.i);
        int j = (f.j == a) ? b : (f.j == b ? a : f.j);
        if (i > j) {
            std::swap(i, j);
            if (f.sign < 0 && e % 2 == 1) s.num = s.num.scaled(RingElem(-1));
        }
        s.den[{i, j, f.sign}] += e;
    }
    s.reduce();
    return *this == s;
}

SymRat SymRat::residue_at(int a, int b, int sign) const {
    if (a > b) throw std::invalid_argument("residue_at: need a < b");
    auto it = den.find({a, b, sign});
    if (it == den.end() || it->second != 1)
        throw std::domain_error("residue_at: pole is not simple");
    SymRat r(nvars);
    RingElem ms(-sign);
    r.num = num.substitute_var(a, ms, b);
    for (const auto& [f, e] : den) {
        if (f == DenFactor{a, b, sign}) continue;
        if (f.i != a && f.j != a) {
            for (int k = 0; k < e; ++k) r = r.div_binomial(f.i, f.j, f.sign);
            continue;
        }
        // factor involves a: substitute x_a -> -s x_b
        int other = (f.i == a) ? f.j : f.i;
        // (x_a + t x_other) -> (-s x_b + t x_other) = t (x_other + (-s t) x_b)
        int t = f.sign;
        if (other == b) {
            // (-s + t) x_b, with t != s impossible to vanish; t == s excluded (that's the pole)
            RingElem c = RingElem(t - sign);
            if (c.is_zero()) throw std::domain_error("residue_at: higher-order pole");
            XExp m(nvars, 0);
            m[b] = -e;
            r.num = r.num * XPoly::monomial(nvars, m, c.pow(e).inverse());
        } else {
            for (int k = 0; k < e; ++k) {
                r = r.div_binomial(other, b, -sign * t);
                if (t < 0) r.num = r.num.scaled(RingElem(-1));
            }
        }
    }
    r.reduce();
    return r;
}

}  // namespace ffsg
