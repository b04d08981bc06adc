#include "ffsg/sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffsg {

void SymPoly::add(const Partition& p, const RingElem& r) {
    if (r.is_zero()) return;
    auto it = c.find(p);
    if (it == c.end()) {
        c.emplace(p, r);
    } else {
        it->second += r;
        if (it->second.is_zero()) c.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    r.basis = basis;
    for (const auto& [p, v] : c) r.c.emplace(p, -v);
    return r;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    if (a.basis != b.basis) throw std::invalid_argument("SymPoly: mixed bases");
    SymPoly r = a;
    for (const auto& [p, v] : b.c) r.add(p, v);
    return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + (-b); }

SymPoly SymPoly::scaled(const RingElem& r) const {
    SymPoly out;
    out.basis = basis;
    if (r.is_zero()) return out;
    for (const auto& [p, v] : c) out.c.emplace(p, v * r);
    return out;
}

bool operator==(const SymPoly& a, const SymPoly& b) { return a.basis == b.basis && a.c == b.c; }

XPoly sym_expand_m(const Partition& lam, int N) {
    if ((int)lam.size() > N) return XPoly(N);  // m_lambda vanishes for too few variables
    XExp e(N, 0);
    for (size_t i = 0; i < lam.size(); ++i) e[i] = lam[i];
    std::sort(e.begin(), e.end());
    XPoly out(N);
    do {
        out.add_term(e, RingElem(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

XPoly sym_expand_p(const Partition& lam, int N) {
    XPoly out = XPoly::constant(N, RingElem(1));
    for (int part : lam) {
        XPoly pk(N);
        for (int i = 0; i < N; ++i) {
            XExp e(N, 0);
            e[i] = part;
            pk.add_term(e, RingElem(1));
        }
        out = out * pk;
    }
    return out;
}

XPoly sym_expand(const SymPoly& P, int N) {
    XPoly out(N);
    for (const auto& [lam, coeff] : P.c) {
        XPoly b = (P.basis == SymBasis::Monomial) ? sym_expand_m(lam, N) : sym_expand_p(lam, N);
        out = out + b.scaled(coeff);
    }
    return out;
}

SymPoly expanded_to_m(const XPoly& p) {
    SymPoly out;
    out.basis = SymBasis::Monomial;
    std::map<Partition, RingElem> rep;
    for (const auto& [e, coeff] : p.terms) {
        for (int x : e)
            if (x < 0) throw std::invalid_argument("expanded_to_m: Laurent input");
        Partition lam;
        for (int x : e)
            if (x > 0) lam.push_back(x);
        std::sort(lam.rbegin(), lam.rend());
        auto it = rep.find(lam);
        if (it == rep.end())
            rep.emplace(lam, coeff);
        else if (!(it->second == coeff))
            throw std::invalid_argument("expanded_to_m: polynomial is not symmetric");
    }
    // verify each orbit is fully present with the same coefficient
    for (const auto& [lam, coeff] : rep) {
        XExp e(p.nvars, 0);
        if ((int)lam.size() > p.nvars) throw std::invalid_argument("expanded_to_m: bad orbit");
        for (size_t i = 0; i < lam.size(); ++i) e[i] = lam[i];
        std::sort(e.begin(), e.end());
        do {
            if (!(p.coeff(e) == coeff))
                throw std::invalid_argument("expanded_to_m: polynomial is not symmetric");
        } while (std::next_permutation(e.begin(), e.end()));
        out.c.emplace(lam, coeff);
    }
    return out;
}

const std::map<Partition, mpz_class>& powersum_to_m_row(const Partition& lam) {
    static std::map<Partition, std::map<Partition, mpz_class>> cache;
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;

    int N = std::max(1, weight(lam));
    // integer expansion of p_lam at N variables
    std::map<XExp, mpz_class> poly;
    poly[XExp(N, 0)] = 1;
    for (int part : lam) {
        std::map<XExp, mpz_class> next;
        for (const auto& [e, c] : poly)
            for (int i = 0; i < N; ++i) {
                XExp e2 = e;
                e2[i] += part;
                next[e2] += c;
            }
        poly = std::move(next);
    }
    std::map<Partition, mpz_class> row;
    for (const auto& [e, c] : poly) {
        Partition mu;
        for (int x : e)
            if (x > 0) mu.push_back(x);
        std::sort(mu.rbegin(), mu.rend());
        XExp sorted(e);
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        bool is_rep = std::equal(sorted.begin(), sorted.end(), e.begin());
        if (is_rep) row[mu] = c;
    }
    return cache.emplace(lam, std::move(row)).first->second;
}

namespace {

// dominance-refining linear order: compare partial-sum vectors lexicographically
std::vector<Partition> dominance_sorted(int L) {
    auto parts = partitions_of(L);
    auto psums = [L](const Partition& p) {
        std::vector<int> s(L + 1, 0);
        int acc = 0;
        for (int i = 0; i < L; ++i) {
            acc += i < (int)p.size() ? p[i] : 0;
            s[i] = acc;
        }
        return s;
    };
    std::sort(parts.begin(), parts.end(),
              [&](const Partition& a, const Partition& b) { return psums(a) < psums(b); });
    return parts;
}

}  // namespace

SymPoly m_to_p(const SymPoly& P) {
    if (P.basis != SymBasis::Monomial) throw std::invalid_argument("m_to_p: wrong input basis");
    SymPoly out;
    out.basis = SymBasis::PowerSum;
    // group by weight
    std::map<int, std::map<Partition, RingElem>> grades;
    for (const auto& [lam, c] : P.c) grades[weight(lam)][lam] = c;
    for (auto& [L, want] : grades) {
        if (L == 0) {
            out.add({}, want.at(Partition{}));
            continue;
        }
        auto order = dominance_sorted(L);  // ascending
        std::map<Partition, RingElem> sol;
        for (const auto& mu : order) {
            RingElem b = want.count(mu) ? want.at(mu) : RingElem(0);
            for (const auto& [lam, clam] : sol) {
                const auto& row = powersum_to_m_row(lam);
                auto itr = row.find(mu);
                if (itr != row.end()) b -= clam * RingElem(GaussRational(mpq_class(itr->second)));
            }
            const auto& rowmu = powersum_to_m_row(mu);
            RingElem diag(GaussRational(mpq_class(rowmu.at(mu))));
            RingElem cmu = b / diag;
            if (!cmu.is_zero()) sol[mu] = cmu;
        }
        for (auto& [lam, c] : sol) out.add(lam, c);
    }
    return out;
}

SymPoly p_to_m(const SymPoly& P) {
    if (P.basis != SymBasis::PowerSum) throw std::invalid_argument("p_to_m: wrong input basis");
    SymPoly out;
    out.basis = SymBasis::Monomial;
    for (const auto& [lam, c] : P.c) {
        for (const auto& [mu, r] : powersum_to_m_row(lam))
            out.add(mu, c * RingElem(GaussRational(mpq_class(r))));
    }
    return out;
}

}  // namespace ffsg
