#pragma once

#include <map>

#include "ffsg/partition.hpp"
#include "ffsg/xpoly.hpp"

namespace ffsg {

enum class SymBasis { Monomial, PowerSum };

// Symmetric polynomial stored as coefficients over a partition-indexed basis.
struct SymPoly {
    SymBasis basis = SymBasis::Monomial;
    std::map<Partition, RingElem> c;

    bool is_zero() const { return c.empty(); }
    void add(const Partition& p, const RingElem& r);
    SymPoly operator-() const;
    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
    SymPoly scaled(const RingElem& r) const;
    friend bool operator==(const SymPoly& a, const SymPoly& b);
};

// expansions at N variables (requires N >= number of parts / weight as appropriate)
XPoly sym_expand_m(const Partition& lam, int N);
XPoly sym_expand_p(const Partition& lam, int N);
XPoly sym_expand(const SymPoly& P, int N);

// collect an expanded symmetric polynomial into the monomial basis;
// throws if the input is not symmetric.
SymPoly expanded_to_m(const XPoly& p);

// exact basis conversions (homogeneous pieces handled independently)
SymPoly m_to_p(const SymPoly& P);
SymPoly p_to_m(const SymPoly& P);

// integer transition row: p_lam = sum_mu R[mu] m_mu at N = |lam| variables
const std::map<Partition, mpz_class>& powersum_to_m_row(const Partition& lam);

}  // namespace ffsg
