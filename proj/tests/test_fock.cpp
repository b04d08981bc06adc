#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffsg/fock.hpp"
#include "ffsg/linalg.hpp"
#include "ffsg/structconst.hpp"

using namespace ffsg;

namespace {

// Independent normal-ordering oracle: rewrites words of d^nu_k generators with
// the commutator rule  d^nu_k d^mu_{-l} = d^mu_{-l} d^nu_k + delta_{kl} delta_{mu,-nu} k A^nu_k
// (k, l > 0), then reads off the surviving creation monomials.
struct Gen {
    int nu;
    int k;  // signed mode
};

std::map<FockMono, RingElem> oracle_word(std::vector<Gen> word) {
    std::map<FockMono, RingElem> out;
    std::vector<std::pair<std::vector<Gen>, RingElem>> stack{{std::move(word), RingElem(1)}};
    while (!stack.empty()) {
        auto [wd, coeff] = std::move(stack.back());
        stack.pop_back();
        // find the rightmost annihilator with a creation generator to its right
        int pos = -1;
        for (int i = (int)wd.size() - 1; i >= 0; --i) {
            if (wd[i].k > 0 && i + 1 < (int)wd.size() && wd[i + 1].k < 0) {
                pos = i;
                break;
            }
        }
        if (pos < 0) {
            // annihilators (if any) now sit at the right: they kill the vacuum
            bool dead = false;
            for (const auto& g : wd)
                if (g.k > 0) dead = true;
            if (!dead) {
                FockMono m;
                for (const auto& g : wd) (g.nu < 0 ? m.minus : m.plus).push_back(-g.k);
                std::sort(m.minus.rbegin(), m.minus.rend());
                std::sort(m.plus.rbegin(), m.plus.rend());
                auto it = out.find(m);
                if (it == out.end())
                    out.emplace(m, coeff);
                else
                    it->second += coeff;
            }
            continue;
        }
        Gen A = wd[pos], B = wd[pos + 1];
        std::vector<Gen> swapped = wd;
        std::swap(swapped[pos], swapped[pos + 1]);
        stack.push_back({std::move(swapped), coeff});
        if (A.k == -B.k && B.nu == -A.nu) {
            std::vector<Gen> contracted;
            for (int i = 0; i < (int)wd.size(); ++i)
                if (i != pos && i != pos + 1) contracted.push_back(wd[i]);
            stack.push_back({std::move(contracted), coeff * RingElem(A.k) * sc::A(A.nu, A.k)});
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

FockVector from_word(const std::vector<Gen>& word, const Weight& w) {
    FockVector v = FockVector::vacuum(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_mode(it->nu, it->k, v);
    return v;
}

}  // namespace

TEST_CASE("mode action basics") {
    Weight w = Weight::generic();
    FockVector vac = FockVector::vacuum(w);
    CHECK(apply_mode(+1, 1, vac).is_zero());
    // d^+_1 d^-_{-1} |1> = A^+_1 |1>
    FockVector v = apply_mode(+1, 1, apply_mode(-1, -1, vac));
    CHECK(v == vac.scaled(sc::A(+1, 1)));
    CHECK_THROWS(apply_mode(+1, 0, vac));
}

TEST_CASE("normal ordering matches the word-rewriting oracle") {
    Weight w = Weight::generic();
    // d^-_2 (d^+_{-2})^2 |1> = 2 (2 A^-_2) d^+_{-2} |1>
    std::vector<Gen> word{{-1, 2}, {+1, -2}, {+1, -2}};
    FockVector got = from_word(word, w);
    auto expect = oracle_word(word);
    CHECK(expect.size() == 1);
    FockMono key;
    key.plus = {2};
    CHECK(expect.at(key) == RingElem(2) * RingElem(2) * sc::A(-1, 2));
    CHECK(got.terms.size() == 1);
    CHECK(got.terms.at(key) == expect.at(key));

    // randomized words
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Gen> wd;
        int len = 1 + (int)(rng() % 5);
        for (int i = 0; i < len; ++i) {
            int nu = rng() % 2 ? 1 : -1;
            int k = 1 + (int)(rng() % 3);
            if (rng() % 2) k = -k;
            wd.push_back({nu, k});
        }
        FockVector got2 = from_word(wd, w);
        auto want = oracle_word(wd);
        CHECK(got2.terms.size() == want.size());
        for (const auto& [m, c] : want) {
            REQUIRE(got2.terms.count(m) == 1);
            CHECK(got2.terms.at(m) == c);
        }
    }
}

TEST_CASE("A representation") {
    Weight w = Weight::generic();
    FockVector vac = FockVector::vacuum(w);
    FockVector v = a_rep_apply(AElement::c(1), vac);
    // (d^-_{-1} - d^+_{-1})/A^+_1
    FockMono m1, m2;
    m1.minus = {1};
    m2.plus = {1};
    CHECK(v.terms.at(m1) == sc::A(+1, 1).inverse());
    CHECK(v.terms.at(m2) == -sc::A(+1, 1).inverse());
    // <1| pibar(c_{-k}) = 0: right action of the negative modes on the bra
    FockVector bvac = FockVector::vacuum(w, Side::Bra);
    CHECK((apply_mode(-1, -2, bvac) - apply_mode(+1, -2, bvac)).is_zero());
    // vacuum pairing of pi(c_{-2}) against pibar(c_{-2}): -(1+1)*2/A^+_2
    FockVector bra = a_rep_apply(AElement::c(2), bvac);
    FockVector ket = a_rep_apply(AElement::c(2), vac);
    CHECK(pairing(bra, ket) == RingElem(-4) / sc::A(+1, 2));
}

TEST_CASE("pairing") {
    Weight w = Weight::mn(1, 1);
    FockVector vac = FockVector::vacuum(w);
    FockVector bvac = FockVector::vacuum(w, Side::Bra);
    CHECK(pairing(bvac, vac) == RingElem(1));
    // <1| d^+_1 d^-_{-1} |1> = A^+_1
    FockVector bra = apply_mode(+1, 1, bvac);
    FockVector ket = apply_mode(-1, -1, vac);
    CHECK(pairing(bra, ket) == sc::A(+1, 1));
    // level mismatch pairs to zero
    FockVector k2 = apply_mode(-1, -2, ket);
    CHECK(pairing(bra, k2).is_zero());
    // weight mismatch is an error
    FockVector other = FockVector::vacuum(Weight::mn(1, 3));
    CHECK_THROWS(pairing(bra, other));
}

TEST_CASE("transpose") {
    Weight w = Weight::generic();
    FockVector vac = FockVector::vacuum(w);
    // |1>_a -> <1|_{-a}
    FockVector t = transpose(vac);
    CHECK(t.side == Side::Bra);
    CHECK(t.w.upow == -1);
    // d^-_{-2}|1>_a -> <1|_{-a} (-d^+_2)
    FockVector v = apply_mode(-1, -2, vac);
    FockVector tv = transpose(v);
    FockMono m;
    m.plus = {2};
    CHECK(tv.terms.at(m) == RingElem(-1));
    // involution on a random level-3 vector
    std::mt19937_64 rng(99);
    FockVector r;
    r.side = Side::Ket;
    r.w = w;
    for (const auto& b : fock_basis(3)) r.add_term(b, RingElem((long)(rng() % 7) - 3));
    CHECK(transpose(transpose(r)) == r);
    // pairing(transpose(k), transpose(b)) = pairing(b, k)
    FockVector bra = a_rep_apply(AElement::c(2), FockVector::vacuum(w, Side::Bra));
    FockVector ket = a_rep_apply(AElement::c(2), vac);
    CHECK(pairing(transpose(ket), transpose(bra)) == pairing(bra, ket));
}

TEST_CASE("A-subspace membership and inversion") {
    Weight w = Weight::generic();
    FockVector vac = FockVector::vacuum(w);
    CHECK(is_A_vector(a_rep_apply(AElement::c(2), vac)));
    CHECK_FALSE(is_A_vector(apply_mode(-1, -1, vac)));

    // (d^-_{-1} - d^+_{-1})|1> = pibar(A^+_1 c_{-1})|1>
    FockVector v = apply_mode(-1, -1, vac) - apply_mode(+1, -1, vac);
    AElement h = solve_A_representation(v);
    CHECK(h.terms.size() == 1);
    CHECK(h.terms.at({1}) == sc::A(+1, 1));
    CHECK(solve_A_representation(vac) == AElement::one());
    CHECK_THROWS_AS(solve_A_representation(apply_mode(-1, -1, vac)), std::domain_error);

    // random level-4 round trip
    std::mt19937_64 rng(4242);
    AElement rnd;
    for (const auto& lam : partitions_of(4)) rnd.add(lam, RingElem((long)(rng() % 9) - 4));
    FockVector img = a_rep_apply(rnd, vac);
    CHECK(solve_A_representation(img) == rnd);
}

TEST_CASE("[pi(c_k), D_l] = 0 on truncated spaces") {
    Weight w = Weight::generic();
    for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l) {
            for (const auto& b : fock_basis(2)) {
                FockVector v;
                v.side = Side::Ket;
                v.w = w;
                v.terms.emplace(b, RingElem(1));
                FockVector lhs = apply_D(l, a_rep_apply(AElement::c(k), v));
                FockVector rhs = a_rep_apply(AElement::c(k), apply_D(l, v));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("A-subspace dimension equals the partition count (small levels)") {
    for (int L = 1; L <= 5; ++L) {
        auto basis = fock_basis(L);
        // stack the D_k maps, k = 1..L
        std::vector<std::vector<RingElem>> rows;
        Weight w = Weight::generic();
        for (int k = 1; k <= L; ++k) {
            auto target = fock_basis(L - k);
            std::map<FockMono, int> index;
            for (size_t i = 0; i < target.size(); ++i) index[target[i]] = (int)i;
            std::vector<std::vector<RingElem>> block(target.size(),
                                                     std::vector<RingElem>(basis.size(), RingElem(0)));
            for (size_t j = 0; j < basis.size(); ++j) {
                FockVector v;
                v.side = Side::Ket;
                v.w = w;
                v.terms.emplace(basis[j], RingElem(1));
                FockVector dv = apply_D(k, v);
                for (const auto& [m, c] : dv.terms) block[index.at(m)][j] = c;
            }
            for (auto& r : block) rows.push_back(std::move(r));
        }
        Matrix M((int)rows.size(), (int)basis.size());
        for (int i = 0; i < M.rows; ++i)
            for (int j = 0; j < M.cols; ++j) M.at(i, j) = rows[i][j];
        int r = rank(M);
        CHECK((int)basis.size() - r == (int)partition_count(L));
    }
}
