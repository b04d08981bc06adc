#include "ffsg/screening.hpp"

#include <algorithm>
#include <set>

#include "ffsg/linalg.hpp"
#include "ffsg/structconst.hpp"

namespace ffsg {

FockVector apply_Sk(int k, const FockVector& v) { return apply_vertex_mode(spec_screening(), k, v); }

namespace {

void require_special(const FockVector& v, const char* who) {
    if (!v.w.special) throw std::invalid_argument(std::string(who) + ": weight must be a_{mn}");
}

int mn_index(const FockVector& v) { return v.w.m - v.w.n + 1; }  // Sigma mode on Fbar_{mn}

}  // namespace

FockVector apply_Sigma(const FockVector& v) {
    require_special(v, "apply_Sigma");
    return apply_Sk(mn_index(v), v);
}

FockVector apply_W(const FockVector& v) {
    require_special(v, "apply_W");
    int m = v.w.m, n = v.w.n;
    int lmax = v.max_level();
    FockVector out;
    out.side = Side::Ket;
    out.w = v.w.ket_shifted(2);
    // inner mode m-n+1+k annihilates levels above; only k <= lmax-(m-n+1) contribute
    for (int k = 1; m - n + 1 + k <= lmax; ++k) {
        FockVector inner = apply_Sk(m - n + 1 + k, v);
        if (inner.is_zero()) continue;
        FockVector term = apply_Sk(m - n + 3 - k, inner).scaled(sc::Fnk(n, k));
        out = out + term;
    }
    return out;
}

FockVector apply_Q(int s, const FockVector& v, bool unchecked) {
    require_special(v, "apply_Q");
    if (s < 1) throw std::invalid_argument("apply_Q: s must be >= 1");
    if (!unchecked && (((s - v.w.n) % 2) + 2) % 2 != 0)
        throw std::invalid_argument("apply_Q: parity condition s = n (mod 2) fails");
    FockVector cur = v;
    for (int i = 0; i < s / 2; ++i) cur = apply_W(cur);
    if (s % 2 == 1) cur = apply_Sigma(cur);
    return cur;
}

bool is_weak_A_vector(const FockVector& v, int s) {
    FockVector k = (v.side == Side::Ket) ? v : transpose(v);
    int lmax = k.max_level();
    for (int j = 1; j <= lmax; ++j) {
        FockVector dv = apply_D(j, k);
        if (dv.is_zero()) continue;
        if (!apply_Q(s, dv, true).is_zero()) return false;
    }
    return true;
}

SingularVectorResult singular_vector(int m, int n, int s) {
    if ((((s - n) % 2) + 2) % 2 != 0)
        throw std::invalid_argument("singular_vector: need s = n (mod 2)");
    if (!(s > n - m)) throw std::invalid_argument("singular_vector: need s > n - m");
    FockVector vac = FockVector::vacuum(Weight::mn(-m, -n + 2 * s));
    FockVector nv = apply_Q(s, vac);
    if (nv.is_zero()) throw std::domain_error("singular_vector: Q^(s)|1> vanished");
    SingularVectorResult res;
    res.level = s * (m - n + s);
    int lv = 0;
    if (!nv.homogeneous(&lv) || lv != res.level)
        throw std::logic_error("singular_vector: grading violated");
    if (!(nv.w == Weight::mn(-m, -n))) throw std::logic_error("singular_vector: weight violated");
    res.vec = nv;
    res.a_element = solve_A_representation(nv);
    return res;
}

FockVector cosingular_representative(int m, int s, int t, const std::vector<int>& kvec) {
    FockVector cur = FockVector::vacuum(Weight::mn(m, m + s + t));
    cur = apply_Q(t, cur, true);
    for (auto it = kvec.rbegin(); it != kvec.rend(); ++it) cur = apply_Sk(-*it, cur);
    return cur;
}

// ---------------------------------------------------------------------------
// constant-term formulas

namespace {

// sparse polynomial in w_1..w_r over the field, with per-variable caps
using WPoly = std::map<std::vector<int>, RingElem>;

WPoly wp_mul(const WPoly& a, const WPoly& b, const std::vector<int>& cap) {
    std::map<std::vector<int>, std::vector<RingElem>> acc;
    const int r = (int)cap.size();
    std::vector<int> e(r);
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            bool ok = true;
            for (int i = 0; i < r; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > cap[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) acc[e].push_back(ca * cb);
        }
    WPoly out;
    for (auto& [ee, parts] : acc) {
        RingElem c = RingElem::sum(parts);
        if (!c.is_zero()) out.emplace(ee, std::move(c));
    }
    return out;
}

}  // namespace

RingElem kappa_sm(int s, int m) {
    if (s < 1) throw std::invalid_argument("kappa_sm: s >= 1");
    if (s == 1) return RingElem(1);
    const int r = s - 1;
    std::vector<int> cap(r);
    for (int i = 1; i <= r; ++i) cap[i - 1] = i * (s - i);
    WPoly acc;
    acc.emplace(std::vector<int>(r, 0), RingElem(1));
    // prod_{1<=i<=j<s} (1 - prod_{t=i..j} w_t^2)
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) {
            WPoly f;
            f.emplace(std::vector<int>(r, 0), RingElem(1));
            std::vector<int> e(r, 0);
            for (int t = i; t <= j; ++t) e[t - 1] = 2;
            f.emplace(e, RingElem(-1));
            acc = wp_mul(acc, f, cap);
        }
    // prod_{i=1..floor(s/2)} F^{m+s}(w_{2i-1})
    for (int i = 1; i <= s / 2; ++i) {
        int var = 2 * i - 1;  // w_{2i-1}, 1-based
        WPoly f;
        for (int k = 1; k <= cap[var - 1]; ++k) {
            std::vector<int> e(r, 0);
            e[var - 1] = k;
            f.emplace(e, sc::Fnk(m + s, k));
        }
        if (f.empty()) return RingElem(0);
        acc = wp_mul(acc, f, cap);
    }
    auto it = acc.find(cap);
    return it == acc.end() ? RingElem(0) : it->second;
}

RingElem kappa_sm_closed(int s, int m) {
    if (s < 1) throw std::invalid_argument("kappa_sm_closed: s >= 1");
    if (s % 2 == 0) {
        int k = s / 2;
        RingElem r(1);
        for (int i = 2; i <= k; ++i) r *= RingElem(i);
        for (int i = 1; i <= k; ++i) r *= sc::Fnk(m, 2 * i - 1);
        return r;
    }
    int k = (s - 1) / 2;
    RingElem r((k % 2 == 0) ? 1 : -1);
    for (int i = 2; i <= k; ++i) r *= RingElem(i);
    for (int i = 1; i <= k; ++i) r *= sc::Fnk(m + 1, 2 * i);
    return r;
}

RingElem c_coeff(int nu, const std::vector<int>& kvec) {
    if ((int)kvec.size() != nu) throw std::invalid_argument("c_coeff: kvec must have nu entries");
    long total = 0;
    for (int k : kvec) total += k;
    if (total != 0) return RingElem(0);
    if (nu <= 1) return RingElem(1);
    const int r = nu - 1;
    std::vector<int> cap(r);
    for (int i = 1; i <= r; ++i) {
        long tgt = 0;
        for (int t = i + 1; t <= nu; ++t) tgt += kvec[t - 1];
        if (tgt < 0) return RingElem(0);
        cap[i - 1] = (int)tgt;
    }
    WPoly acc;
    acc.emplace(std::vector<int>(r, 0), RingElem(1));
    // prod over 1 <= i < j < nu of (1 - prod_{t=i..j} z_t^2)
    for (int i = 1; i <= nu - 2; ++i)
        for (int j = i + 1; j <= nu - 1; ++j) {
            WPoly f;
            f.emplace(std::vector<int>(r, 0), RingElem(1));
            std::vector<int> e(r, 0);
            for (int t = i; t <= j; ++t) e[t - 1] = 2;
            f.emplace(e, RingElem(-1));
            acc = wp_mul(acc, f, cap);
        }
    auto it = acc.find(cap);
    return it == acc.end() ? RingElem(0) : it->second;
}

// ---------------------------------------------------------------------------
// structure probe

int s_mn_value(int m, int n) {
    if (n <= m) return (n % 2 == 0) ? 2 : 1;
    return (((m % 2) + 2) % 2 == 0) ? n - m + 2 : n - m + 1;
}

namespace {

// fixed-index Q^(s) built for the (m,n) descent, applicable at any weight
FockVector apply_Q_fixed(int m, int n, int s, const FockVector& v) {
    // mimic the tag-read composition: W uses (m, n-4i), Sigma the final module
    FockVector cur = v;
    int cm = m, cn = n;
    auto Sk_fixed = [&](int k, const FockVector& x) { return apply_Sk(k, x); };
    for (int i = 0; i < s / 2; ++i) {
        int lmax = cur.max_level();
        FockVector out;
        out.side = Side::Ket;
        out.w = cur.w.ket_shifted(2);
        for (int k = 1; cm - cn + 1 + k <= lmax; ++k) {
            FockVector inner = Sk_fixed(cm - cn + 1 + k, cur);
            if (inner.is_zero()) continue;
            out = out + Sk_fixed(cm - cn + 3 - k, inner).scaled(sc::Fnk(cn, k));
        }
        cur = out;
        cn -= 4;
    }
    if (s % 2 == 1) cur = Sk_fixed(cm - cn + 1, cur);
    return cur;
}

struct LevelMapMatrix {
    Matrix mat;  // rows: target coords, cols: source basis
    int src_dim = 0, dst_dim = 0;
};

// matrix of a ket-side operator between level subspaces in the full Fock basis
template <typename Op>
LevelMapMatrix operator_matrix(Op&& op, const Weight& src_w, int src_level, int dst_level) {
    auto src = fock_basis(src_level);
    auto dst = dst_level < 0 ? std::vector<FockMono>{} : fock_basis(dst_level);
    std::map<FockMono, int> index;
    for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = (int)i;
    LevelMapMatrix out;
    out.src_dim = (int)src.size();
    out.dst_dim = (int)dst.size();
    out.mat = Matrix((int)dst.size(), (int)src.size());
    for (size_t j = 0; j < src.size(); ++j) {
        FockVector v;
        v.side = Side::Ket;
        v.w = src_w;
        v.terms.emplace(src[j], RingElem(1));
        FockVector img = op(v);
        for (const auto& [mo, c] : img.terms) {
            auto it = index.find(mo);
            if (it == index.end()) {
                if (!c.is_zero()) throw std::logic_error("operator_matrix: image off the target level");
                continue;
            }
            out.mat.at(it->second, (int)j) = c;
        }
    }
    return out;
}

// same in the A-subspace bases (partitions)
template <typename Op>
LevelMapMatrix operator_matrix_A(Op&& op, const Weight& src_w, int src_level, int dst_level) {
    auto src = partitions_of(src_level);
    auto dst = dst_level < 0 ? std::vector<Partition>{} : partitions_of(dst_level);
    std::map<Partition, int> index;
    for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = (int)i;
    LevelMapMatrix out;
    out.src_dim = (int)src.size();
    out.dst_dim = (int)dst.size();
    out.mat = Matrix((int)dst.size(), (int)src.size());
    FockVector vac = FockVector::vacuum(src_w);
    for (size_t j = 0; j < src.size(); ++j) {
        AElement h;
        h.add(src[j], RingElem(1));
        FockVector img = op(a_rep_apply(h, vac));
        if (img.is_zero()) continue;
        AElement ha = solve_A_representation(img);
        for (const auto& [lam, c] : ha.terms) out.mat.at(index.at(lam), (int)j) = c;
    }
    return out;
}

int rank_at_sample(const LevelMapMatrix& lm, const mpq_class& vval) {
    Matrix m = lm.mat;
    for (auto& e : m.a)
        if (!e.is_zero()) e = e.substitute_v(vval);
    return rank(std::move(m));
}

}  // namespace

ProbeReport structure_probe(int m, int n, int max_level) {
    ProbeReport rep;
    rep.m = m;
    rep.n = n;
    rep.s_mn = s_mn_value(m, n);
    rep.samples = {mpq_class(3, 5), mpq_class(7, 3), mpq_class(11, 6)};

    // bra labels (m,n) <-> ket modules Fbar_{-m,-n}; transposition preserves levels
    auto ket_w = [&](int bm, int bn) { return Weight::mn(-bm, -bn); };

    for (int l = 0; l <= max_level; ++l) {
        ProbeLevelRow row;
        row.level = l;
        auto basis = fock_basis(l);
        row.dim = (long)basis.size();
        row.dimA = partition_count(l);

        // W out of (F_{mn})_l -> (F_{m,n+4})_{l + 2(m-n) - 4}
        int wdst = l + 2 * (m - n) - 4;
        auto Wop = [&](const FockVector& v) { return apply_W(v); };
        LevelMapMatrix wm = operator_matrix(Wop, ket_w(m, n), l, wdst);
        LevelMapMatrix wma = operator_matrix_A(Wop, ket_w(m, n), l, wdst);
        std::set<int> ranks, ranksA;
        for (const auto& s : rep.samples) {
            ranks.insert(rank_at_sample(wm, s));
            ranksA.insert(rank_at_sample(wma, s));
        }
        if (ranks.size() != 1 || ranksA.size() != 1) rep.samples_agree = false;
        row.rank_W = *ranks.begin();
        row.rank_W_A = *ranksA.begin();
        row.W_max_rank = row.rank_W == std::min<long>(wm.src_dim, wm.dst_dim);
        row.W_max_rank_A = row.rank_W_A == std::min<long>(wma.src_dim, wma.dst_dim);

        // Sigma complex at the nod (F_{mn})_l:
        //   incoming from (F_{m,n-2})_{l-(m-n+1)}, outgoing to (F_{m,n+2})_{l+(m-n-1)}
        auto Sop = [&](const FockVector& v) { return apply_Sigma(v); };
        int lin = l - (m - n + 1);
        long rank_in = 0, rank_out = 0, rank_inA = 0, rank_outA = 0;
        if (lin >= 0) {
            LevelMapMatrix sin_m = operator_matrix(Sop, ket_w(m, n - 2), lin, l);
            LevelMapMatrix sin_a = operator_matrix_A(Sop, ket_w(m, n - 2), lin, l);
            std::set<int> r1, r2;
            for (const auto& s : rep.samples) {
                r1.insert(rank_at_sample(sin_m, s));
                r2.insert(rank_at_sample(sin_a, s));
            }
            if (r1.size() != 1 || r2.size() != 1) rep.samples_agree = false;
            rank_in = *r1.begin();
            rank_inA = *r2.begin();
        }
        {
            int lout = l + (m - n - 1);
            LevelMapMatrix sout_m = operator_matrix(Sop, ket_w(m, n), l, lout);
            LevelMapMatrix sout_a = operator_matrix_A(Sop, ket_w(m, n), l, lout);
            std::set<int> r1, r2;
            for (const auto& s : rep.samples) {
                r1.insert(rank_at_sample(sout_m, s));
                r2.insert(rank_at_sample(sout_a, s));
            }
            if (r1.size() != 1 || r2.size() != 1) rep.samples_agree = false;
            rank_out = *r1.begin();
            rank_outA = *r2.begin();
        }
        row.im_Sigma = rank_in;
        row.ker_Sigma = row.dim - rank_out;
        row.cohomology = row.dim - rank_out - rank_in;
        row.cohomology_A = row.dimA - rank_outA - rank_inA;
        rep.rows.push_back(row);
    }

    // [Q^(s_mn), t_j] on Fbar_{mn} vanishes; off the point it does not
    {
        int s = rep.s_mn;
        bool on_ok = true, off_nonzero = false;
        for (int l = 0; l <= std::min(2, max_level); ++l)
            for (const auto& b : fock_basis(l))
                for (int j = -1; j <= 1; ++j) {
                    FockVector v;
                    v.side = Side::Ket;
                    v.w = Weight::mn(m, n);
                    v.terms.emplace(b, RingElem(1));
                    FockVector lhs = apply_Q_fixed(m, n, s, apply_t_mode(j, v));
                    FockVector rhs = apply_t_mode(j, apply_Q_fixed(m, n, s, v));
                    if (!(lhs == rhs)) on_ok = false;
                    FockVector g;
                    g.side = Side::Ket;
                    g.w = Weight::generic();
                    g.terms.emplace(b, RingElem(1));
                    FockVector lg = apply_Q_fixed(m, n, s, apply_t_mode(j, g));
                    FockVector rg = apply_t_mode(j, apply_Q_fixed(m, n, s, g));
                    if (!(lg == rg)) off_nonzero = true;
                }
        rep.qt_commutes_on_mn = on_ok;
        rep.qt_nonzero_off_point = off_nonzero;
    }
    return rep;
}

}  // namespace ffsg
