#pragma once

#include <map>
#include <optional>

#include "ffsg/partition.hpp"
#include "ffsg/ringelem.hpp"

namespace ffsg {

// Weight of a Fock vacuum: either the symbolic u = e^{i pi a} (optionally
// inverted by transposition) or a special point a_{mn}, plus delta shifts.
struct Weight {
    bool special = false;
    int m = 0, n = 0;   // special labels
    int upow = 1;       // generic: +1 for u, -1 for u^{-1}
    int jshift = 0;     // generic: count of delta shifts (a -> a + j(r-1))

    static Weight generic() { return {}; }
    static Weight mn(int m, int n) {
        Weight w;
        w.special = true;
        w.m = m;
        w.n = n;
        return w;
    }

    // delta on kets: a -> a + r - 1 (i.e. (m,n) -> (m, n-2))
    Weight ket_shifted(int steps = 1) const;
    Weight transposed() const;  // a -> -a
    RingElem u_eff() const;     // e^{i pi a} as an exact monomial

    friend bool operator==(const Weight& a, const Weight& b);
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
};

// Monomial in the creation (ket) or annihilation (bra) modes over a vacuum.
// minus holds the d^- mode values, plus the d^+ mode values (descending).
struct FockMono {
    Partition minus, plus;
    int level() const { return weight(minus) + weight(plus); }
    friend bool operator<(const FockMono& a, const FockMono& b) {
        if (a.minus != b.minus) return a.minus < b.minus;
        return a.plus < b.plus;
    }
    friend bool operator==(const FockMono& a, const FockMono& b) {
        return a.minus == b.minus && a.plus == b.plus;
    }
};

enum class Side { Ket, Bra };

struct FockVector {
    Side side = Side::Ket;
    Weight w;
    std::map<FockMono, RingElem> terms;

    static FockVector vacuum(Weight w, Side side = Side::Ket);
    bool is_zero() const { return terms.empty(); }
    int max_level() const;
    bool homogeneous(int* level_out = nullptr) const;

    void add_term(const FockMono& m, const RingElem& c);
    FockVector operator-() const;
    friend FockVector operator+(const FockVector& a, const FockVector& b);
    friend FockVector operator-(const FockVector& a, const FockVector& b);
    FockVector scaled(const RingElem& c) const;
    friend bool operator==(const FockVector& a, const FockVector& b);
};

// Commutative algebra A: finite sums of c_{-lambda} monomials.
struct AElement {
    std::map<Partition, RingElem> terms;

    static AElement one() {
        AElement h;
        h.terms.emplace(Partition{}, RingElem(1));
        return h;
    }
    static AElement c(int k, RingElem coeff = RingElem(1));
    bool is_zero() const { return terms.empty(); }
    void add(const Partition& p, const RingElem& coeff);
    friend AElement operator+(const AElement& a, const AElement& b);
    friend AElement operator-(const AElement& a, const AElement& b);
    friend AElement operator*(const AElement& a, const AElement& b);
    AElement scaled(const RingElem& c) const;
    friend bool operator==(const AElement& a, const AElement& b);
    int max_level() const;
};

// --- Heisenberg action -------------------------------------------------------

// d^nu_k applied to a ket (left) or bra (right); k != 0. nu is +1 or -1.
FockVector apply_mode(int nu, int k, const FockVector& v);

// pi-bar(h) on kets / pi(h) on bras.
FockVector a_rep_apply(const AElement& h, const FockVector& v);

// D_k = d^-_k + (-)^k d^+_k applied to a ket.
FockVector apply_D(int k, const FockVector& v);

// Heisenberg dual pairing <b | k>; weights must match.
RingElem pairing(const FockVector& bra, const FockVector& ket);

// antiautomorphism: ket <-> bra, a -> -a
FockVector transpose(const FockVector& v);

// true iff D_k v = 0 for 0 < k <= level(v); the weak variant instead tests
// Q^(s) D_k v = 0 with Q from the screening module (declared there).
bool is_A_vector(const FockVector& v);

// Solve pi-bar(h)|1> = v (kets) or <1|pi(h) = v (bras); throws if v is not in
// the A-subspace.
AElement solve_A_representation(const FockVector& v);

// Basis enumeration of the level-l subspace (pairs of partitions).
std::vector<FockMono> fock_basis(int level);

}  // namespace ffsg
