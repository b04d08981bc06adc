#include "ffsg/fock.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffsg/structconst.hpp"

namespace ffsg {

Weight Weight::ket_shifted(int steps) const {
    Weight w = *this;
    if (special)
        w.n -= 2 * steps;
    else
        w.jshift += steps;
    return w;
}

Weight Weight::transposed() const {
    Weight w = *this;
    if (special) {
        w.m = -m;
        w.n = -n;
    } else {
        w.upow = -upow;
        w.jshift = -jshift;
    }
    return w;
}

RingElem Weight::u_eff() const {
    if (special) return RingElem::monomial(n - m, 0, GaussRational::ipow(n));
    // u^upow * (-1)^j v^{-2j}
    GaussRational sign = (jshift % 2 == 0) ? GaussRational(1) : GaussRational(-1);
    return RingElem::monomial(-2 * jshift, upow, sign);
}

bool operator==(const Weight& a, const Weight& b) {
    if (a.special != b.special) return false;
    if (a.special) return a.m == b.m && a.n == b.n;
    return a.upow == b.upow && a.jshift == b.jshift;
}

FockVector FockVector::vacuum(Weight w, Side side) {
    FockVector v;
    v.side = side;
    v.w = w;
    v.terms.emplace(FockMono{}, RingElem(1));
    return v;
}

int FockVector::max_level() const {
    int l = 0;
    for (const auto& [m, c] : terms) l = std::max(l, m.level());
    return l;
}

bool FockVector::homogeneous(int* level_out) const {
    if (terms.empty()) {
        if (level_out) *level_out = 0;
        return true;
    }
    int l = terms.begin()->first.level();
    for (const auto& [m, c] : terms)
        if (m.level() != l) return false;
    if (level_out) *level_out = l;
    return true;
}

void FockVector::add_term(const FockMono& m, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

FockVector FockVector::operator-() const {
    FockVector r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
    if (a.side != b.side || a.w != b.w) throw std::invalid_argument("FockVector: side/weight mismatch");
    FockVector r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

FockVector operator-(const FockVector& a, const FockVector& b) { return a + (-b); }

FockVector FockVector::scaled(const RingElem& c) const {
    FockVector r;
    r.side = side;
    r.w = w;
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms) r.terms.emplace(m, t * c);
    return r;
}

bool operator==(const FockVector& a, const FockVector& b) {
    return a.side == b.side && a.w == b.w && a.terms == b.terms;
}

AElement AElement::c(int k, RingElem coeff) {
    if (k <= 0) throw std::invalid_argument("AElement::c: k must be >= 1");
    AElement h;
    if (!coeff.is_zero()) h.terms.emplace(Partition{k}, std::move(coeff));
    return h;
}

void AElement::add(const Partition& p, const RingElem& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AElement operator+(const AElement& a, const AElement& b) {
    AElement r = a;
    for (const auto& [p, c] : b.terms) r.add(p, c);
    return r;
}

AElement operator-(const AElement& a, const AElement& b) {
    AElement r = a;
    for (const auto& [p, c] : b.terms) r.add(p, -c);
    return r;
}

AElement operator*(const AElement& a, const AElement& b) {
    AElement r;
    for (const auto& [p, c] : a.terms)
        for (const auto& [q, d] : b.terms) {
            Partition m = p;
            m.insert(m.end(), q.begin(), q.end());
            std::sort(m.rbegin(), m.rend());
            r.add(m, c * d);
        }
    return r;
}

AElement AElement::scaled(const RingElem& c) const {
    AElement r;
    if (c.is_zero()) return r;
    for (const auto& [p, t] : terms) r.terms.emplace(p, t * c);
    return r;
}

bool operator==(const AElement& a, const AElement& b) { return a.terms == b.terms; }

int AElement::max_level() const {
    int l = 0;
    for (const auto& [p, c] : terms) l = std::max(l, weight(p));
    return l;
}

// ---------------------------------------------------------------------------

namespace {

void insert_part(Partition& p, int k) {
    p.insert(std::upper_bound(p.begin(), p.end(), k, std::greater<int>()), k);
}

int count_part(const Partition& p, int k) { return (int)std::count(p.begin(), p.end(), k); }

void remove_part(Partition& p, int k) {
    auto it = std::find(p.begin(), p.end(), k);
    p.erase(it);
}

// ket-side elementary action
FockVector apply_mode_ket(int nu, int k, const FockVector& v) {
    if (k == 0) throw std::invalid_argument("apply_mode: k = 0 is the zero mode");
    FockVector r;
    r.side = v.side;
    r.w = v.w;
    if (k < 0) {
        int val = -k;
        for (const auto& [m, c] : v.terms) {
            FockMono m2 = m;
            insert_part(nu > 0 ? m2.plus : m2.minus, val);
            r.add_term(m2, c);
        }
        return r;
    }
    // annihilator: contracts with creation factors of the opposite sign
    RingElem amp = RingElem(k) * sc::A(nu, k);
    for (const auto& [m, c] : v.terms) {
        const Partition& pool = (nu > 0) ? m.minus : m.plus;
        int mult = count_part(pool, k);
        if (mult == 0) continue;
        FockMono m2 = m;
        remove_part(nu > 0 ? m2.minus : m2.plus, k);
        r.add_term(m2, c * RingElem(mult) * amp);
    }
    return r;
}

}  // namespace

FockVector apply_mode(int nu, int k, const FockVector& v) {
    if (v.side == Side::Ket) return apply_mode_ket(nu, k, v);
    // right action on bras through the antiautomorphism:
    // (<v| d^nu_k)^T = (d^nu_k)^T |v^T> = -d^{-nu}_{-k} |v^T>
    FockVector t = transpose(v);
    FockVector r = apply_mode_ket(-nu, -k, t).scaled(RingElem(-1));
    return transpose(r);
}

FockVector a_rep_apply(const AElement& h, const FockVector& v) {
    FockVector out;
    out.side = v.side;
    out.w = v.w;
    for (const auto& [lam, coeff] : h.terms) {
        FockVector cur = v.scaled(coeff);
        for (int k : lam) {
            // pi-bar(c_{-k}) = (d^-_{-k} - d^+_{-k}) / A^+_k on kets;
            // pi(c_{-k}) = (d^-_k - d^+_k) / A^+_k acting right on bras.
            int mode = (v.side == Side::Ket) ? -k : k;
            FockVector t1 = apply_mode(-1, mode, cur);
            FockVector t2 = apply_mode(+1, mode, cur);
            cur = (t1 - t2).scaled(sc::A(+1, k).inverse());
        }
        out = out + cur;
    }
    return out;
}

FockVector apply_D(int k, const FockVector& v) {
    FockVector t1 = apply_mode(-1, k, v);
    FockVector t2 = apply_mode(+1, k, v);
    int sign = (((k % 2) + 2) % 2 == 0) ? 1 : -1;
    return sign > 0 ? t1 + t2 : t1 - t2;
}

RingElem pairing(const FockVector& bra, const FockVector& ket) {
    if (bra.side != Side::Bra || ket.side != Side::Ket)
        throw std::invalid_argument("pairing: need (bra, ket)");
    if (bra.w != ket.w) throw std::invalid_argument("pairing: weight mismatch");
    std::vector<RingElem> parts;
    for (const auto& [bm, bc] : bra.terms) {
        // apply the bra's annihilators to the ket; all of them commute
        FockVector cur = ket;
        for (int k : bm.minus) cur = apply_mode_ket(-1, k, cur);
        for (int k : bm.plus) cur = apply_mode_ket(+1, k, cur);
        auto it = cur.terms.find(FockMono{});
        if (it != cur.terms.end()) parts.push_back(bc * it->second);
    }
    return RingElem::sum(parts);
}

FockVector transpose(const FockVector& v) {
    FockVector r;
    r.side = (v.side == Side::Ket) ? Side::Bra : Side::Ket;
    r.w = v.w.transposed();
    for (const auto& [m, c] : v.terms) {
        FockMono t;
        t.minus = m.plus;  // (d^-_{-k})^T = -d^+_k and vice versa
        t.plus = m.minus;
        int nfac = (int)(m.minus.size() + m.plus.size());
        r.add_term(t, (nfac % 2 == 0) ? c : -c);
    }
    return r;
}

bool is_A_vector(const FockVector& v) {
    FockVector k = (v.side == Side::Ket) ? v : transpose(v);
    int lmax = k.max_level();
    for (int j = 1; j <= lmax; ++j)
        if (!apply_D(j, k).is_zero()) return false;
    return true;
}

AElement solve_A_representation(const FockVector& v) {
    FockVector ket = (v.side == Side::Ket) ? v : transpose(v);
    // The pure d^- monomial of pi-bar(c_{-lambda})|1> is lambda itself with
    // coefficient 1/prod A^+_{lambda_i}; distinct lambda give distinct keys,
    // so coefficients read off directly. Verify by reconstructing.
    AElement h;
    for (const auto& [m, c] : ket.terms) {
        if (!m.plus.empty()) continue;
        RingElem scale(1);
        for (int k : m.minus) scale *= sc::A(+1, k);
        h.add(m.minus, c * scale);
    }
    FockVector rebuilt = a_rep_apply(h, FockVector::vacuum(ket.w));
    if (!(rebuilt == ket)) throw std::domain_error("solve_A_representation: vector is not in the A-subspace");
    return h;
}

std::vector<FockMono> fock_basis(int level) {
    std::vector<FockMono> out;
    for (int lm = 0; lm <= level; ++lm) {
        auto mus = partitions_of(lm);
        auto nus = partitions_of(level - lm);
        for (const auto& a : mus)
            for (const auto& b : nus) out.push_back({a, b});
    }
    return out;
}

}  // namespace ffsg
