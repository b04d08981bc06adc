#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ffsg {

// Element of Q(i): re + i*im with exact rational parts.
struct GaussRational {
    mpq_class re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long r) : re(r), im(0) {}
    GaussRational(const mpq_class& r) : re(r), im(0) {}
    GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i(long k = 1) {
        GaussRational g;
        g.im = k;
        return g;
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussRational operator-() const { return {-re, -im}; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
        mpq_class n = o.re * o.re + o.im * o.im;
        mpq_class r = (re * o.re + im * o.im) / n;
        mpq_class i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    GaussRational inverse() const {
        GaussRational one(1);
        return one / *this;
    }

    // i^k for any integer k
    static GaussRational ipow(long k) {
        long m = ((k % 4) + 4) % 4;
        switch (m) {
            case 0: return GaussRational(1);
            case 1: return i();
            case 2: return GaussRational(-1);
            default: return i(-1);
        }
    }
};

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace ffsg
