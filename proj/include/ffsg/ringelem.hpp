#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ffsg/rational.hpp"

namespace ffsg {

// Laurent polynomial in v = q^{1/2} and u = e^{i pi a} over Q(i).
// Terms sorted ascending by (pv, pu); no zero coefficients.
struct VUTerm {
    int pv = 0, pu = 0;
    GaussRational c;
};

struct VUPoly {
    std::vector<VUTerm> t;

    bool is_zero() const { return t.empty(); }
    static VUPoly zero() { return {}; }
    static VUPoly mono(int pv, int pu, GaussRational c);

    VUPoly operator-() const;
    friend VUPoly operator+(const VUPoly& a, const VUPoly& b);
    friend VUPoly operator-(const VUPoly& a, const VUPoly& b);
    friend VUPoly operator*(const VUPoly& a, const VUPoly& b);
    friend bool operator==(const VUPoly& a, const VUPoly& b);

    VUPoly scaled(const GaussRational& s) const;
    VUPoly shifted(int dv, int du) const;  // multiply by v^dv u^du
    int min_pv() const;
    int min_pu() const;
    int max_pv() const;
    int max_pu() const;
};

// total order for polynomials (used for interning)
struct VUPolyOrder {
    bool operator()(const VUPoly& a, const VUPoly& b) const;
};

// interned denominator atoms: normalized polynomials shared by id
namespace atom {
int intern(const VUPoly& f);     // f normalized: min exps 0, lex-first coeff 1
const VUPoly& get(int id);
}  // namespace atom

using FactorMap = std::map<int, int>;  // atom id -> exponent >= 1

// Exact element of Q(i)(v, u). The denominator is kept as a product of
// normalized polynomial factors (each with min exponents 0, lexicographically
// first coefficient 1, and at least two terms); no factor divides the
// numerator. Full gcd reduction happens at canonicalization points.
class RingElem {
  public:
    RingElem() = default;
    RingElem(long n) : RingElem(GaussRational(n)) {}
    explicit RingElem(const GaussRational& g);
    static RingElem from_fraction(VUPoly num, VUPoly den);
    static RingElem monomial(int pv, int pu, GaussRational c = GaussRational(1));
    static RingElem v(int p = 1) { return monomial(p, 0); }
    static RingElem u(int p = 1) { return monomial(0, p); }
    static RingElem i() { return RingElem(GaussRational::i()); }

    // fully reduced canonical fraction (denominator's lex-first coefficient 1)
    std::pair<VUPoly, VUPoly> canonical() const;
    const VUPoly& raw_num() const { return num_; }
    const FactorMap& raw_den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.empty(); }
    size_t complexity() const;

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    RingElem& operator/=(const RingElem& o);
    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
    friend RingElem operator/(RingElem a, const RingElem& b) { return a /= b; }
    friend bool operator==(const RingElem& a, const RingElem& b);
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }
    bool less_for_map(const RingElem& o) const;  // arbitrary total order on raw form

    RingElem inverse() const;
    RingElem pow(long e) const;

    // single-pass sum over a common denominator (much cheaper than folding +=)
    static RingElem sum(const std::vector<RingElem>& terms);

    // u |-> i^n v^(n-m); throws if the denominator vanishes identically.
    RingElem specialize_a(int m, int n) const;
    // u |-> monomial replacement (e.g. -u, u v^2, c u^{-1}).
    RingElem substitute_u(const RingElem& repl) const;
    // v |-> rational constant (probe sampling).
    RingElem substitute_v(const mpq_class& val) const;
    // scaled a-derivative D = u d/du.
    RingElem d_a() const;

    std::optional<GaussRational> as_constant() const;

    VUPoly den_expanded() const;

  private:
    VUPoly num_;
    FactorMap den_;
    void push_den_factor(VUPoly f, int exp);  // normalizes and folds scalars
    void atom_reduce();
};

// gcd of two polynomials (both with min exponents >= 0), lex-first-monic.
VUPoly vupoly_gcd(const VUPoly& a, const VUPoly& b);
// exact division; throws if not divisible.
VUPoly vupoly_divexact(const VUPoly& a, const VUPoly& b);
// try exact division; returns false without modifying q on failure.
bool vupoly_try_divexact(const VUPoly& a, const VUPoly& b, VUPoly& q);

}  // namespace ffsg
