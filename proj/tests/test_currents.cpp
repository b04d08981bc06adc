#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffsg/structconst.hpp"
#include "ffsg/vertex.hpp"

using namespace ffsg;

namespace {

SymRat f_of(int nv, int num_var, int den_var) {
    // f(x_num/x_den) as a SymRat
    RingElem q = RingElem::v(2), qi = RingElem::v(-2);
    XPoly N = XPoly::variable(nv, num_var), D = XPoly::variable(nv, den_var);
    XPoly numr = (N + D.scaled(q)) * (N - D.scaled(qi));
    SymRat r = SymRat::from_poly(numr);
    r = r.div_binomial(num_var, den_var, -1);
    r = r.div_binomial(num_var, den_var, +1);
    return r;
}

}  // namespace

TEST_CASE("vacuum matrix elements") {
    Weight w = Weight::generic();
    AElement one = AElement::one();
    SymRat j0 = wick_matrix_element(one, one, w, 0);
    CHECK(j0 == SymRat::constant(0, RingElem(1)));

    SymRat j1 = wick_matrix_element(one, one, w, 1);
    CHECK(j1 == SymRat::constant(1, RingElem::u(1) + RingElem::u(-1)));

    SymRat j2 = wick_matrix_element(one, one, w, 2);
    SymRat expect = SymRat::constant(2, RingElem::u(2) + RingElem::u(-2)) + f_of(2, 0, 1) + f_of(2, 1, 0);
    CHECK(j2 == expect);
}

TEST_CASE("simple kinematic poles and symmetry") {
    Weight w = Weight::mn(1, 1);
    AElement one = AElement::one();
    for (int nt = 2; nt <= 4; ++nt) {
        AElement h = AElement::c(2);
        SymRat J = wick_matrix_element(h, one, w, nt);
        for (const auto& [f, e] : J.den) {
            CHECK(e <= 1);
            CHECK(f.sign == +1);
        }
        for (int a = 0; a + 1 < nt; ++a) CHECK(J.symmetric_under_swap(a, a + 1));
    }
    // with h and hbar of level <= 3
    AElement h2;
    h2.add({2, 1}, RingElem(1));
    SymRat J = wick_matrix_element(h2, AElement::c(3), w, 3);
    for (const auto& [f, e] : J.den) CHECK(e <= 1);
    CHECK(J.symmetric_under_swap(0, 2));
}

TEST_CASE("odd generators act by power-sum multiplication") {
    Weight w = Weight::generic();
    AElement one = AElement::one();
    for (int k : {1, 2}) {
        int deg = 2 * k - 1;
        AElement h = AElement::c(deg);
        for (int nt : {1, 2, 3}) {
            SymRat J = wick_matrix_element(h, one, w, nt);
            SymRat base = wick_matrix_element(one, one, w, nt);
            XPoly pk(nt);
            for (int i = 0; i < nt; ++i) {
                XExp e(nt, 0);
                e[i] = deg;
                pk.add_term(e, RingElem(1));
            }
            CHECK(J == SymRat::from_poly(pk) * base);
        }
    }
}

TEST_CASE("s insertions are transparent to the A-insertions") {
    Weight w = Weight::generic();
    AElement one = AElement::one();
    AElement h = AElement::c(2);
    // J^{h,1}(x; y) with one s equals the x-insertion factors times <1|t s|1> structure:
    // verified indirectly: the insertion sum has no y-terms, so setting h's insertion
    // aside, dividing J^{h}/J^{1} must be y-independent and equal the t-only ratio.
    SymRat Jh = wick_matrix_element(h, one, w, 1, 1);
    SymRat J1 = wick_matrix_element(one, one, w, 1, 1);
    SymRat Jh_t = wick_matrix_element(h, one, w, 1, 0);
    SymRat J1_t = wick_matrix_element(one, one, w, 1, 0);
    // Jh * J1_t == Jh_t(x-part lifted) * J1 would need variable embedding; instead
    // check the exact factorization Jh == (x insertion)*J1 with the same factor as t-only.
    // The t-only ratio for h=c_{-2} at nt=1: x^2 * (u - u^-1)/(u + u^-1)... compute both ways.
    SymRat ratio_t = Jh_t;  // J1_t is a constant (u+u^-1)
    RingElem c1 = RingElem::u(1) + RingElem::u(-1);
    CHECK(J1_t == SymRat::constant(1, c1));
    // embed ratio into 2 vars (x0; y0): x-only polynomial
    XPoly emb(2);
    for (const auto& [e, c] : ratio_t.num.terms) {
        XExp e2(2, 0);
        e2[0] = e[0];
        emb.add_term(e2, c / c1);
    }
    CHECK(Jh == SymRat::from_poly(emb) * J1);
}

TEST_CASE("wick engine agrees with the series oracle") {
    Weight w = Weight::generic();
    AElement one = AElement::one();
    const int M = 12;

    SymRat j2 = wick_matrix_element(one, one, w, 2);
    auto o2 = series_oracle(one, one, w, 2, M);
    CHECK(oracle_agrees(j2, o2, 2, M, 0));

    AElement h = AElement::c(2);
    SymRat jh = wick_matrix_element(h, h, w, 2);
    auto oh = series_oracle(h, h, w, 2, 10);
    CHECK(oracle_agrees(jh, oh, 2, 10, 2));

    // randomized instances, fixed seed (the acceptance suite runs the full set)
    std::mt19937_64 rng(20240809);
    for (int trial = 0; trial < 2; ++trial) {
        auto rand_elem = [&](int maxlevel) {
            AElement a;
            auto parts = partitions_of(1 + (int)(rng() % maxlevel));
            a.add(parts[rng() % parts.size()], RingElem(1 + (long)(rng() % 3)));
            if (rng() % 2) a.add({}, RingElem(1));
            return a;
        };
        AElement hh = rand_elem(3), kk = rand_elem(3);
        SymRat J = wick_matrix_element(hh, kk, w, 2);
        auto oo = series_oracle(hh, kk, w, 2, M);
        CHECK(oracle_agrees(J, oo, 2, M, kk.max_level()));
    }
    // one three-point instance
    {
        AElement hh = AElement::c(1), kk = AElement::c(2);
        SymRat J = wick_matrix_element(hh, kk, w, 3);
        auto oo = series_oracle(hh, kk, w, 3, 10);
        CHECK(oracle_agrees(J, oo, 3, 10, 2));
    }
}

TEST_CASE("t and S modes on the vacuum") {
    Weight w = Weight::generic();
    FockVector vac = FockVector::vacuum(w);
    // t_0 |1> = (u + u^-1)|1> + nothing else at level 0... t_0 also creates at higher level? no: mode 0 maps level 0 to 0
    FockVector t0 = apply_t_mode(0, vac);
    CHECK(t0 == vac.scaled(RingElem::u(1) + RingElem::u(-1)));
    // S_k |1> = 0 for k > 0; S_0 |1> = delta-shifted vacuum
    for (int k = 1; k <= 3; ++k) CHECK(apply_vertex_mode(spec_screening(), k, vac).is_zero());
    FockVector s0 = apply_vertex_mode(spec_screening(), 0, vac);
    CHECK(s0 == FockVector::vacuum(w.ket_shifted()));
    // S_{-1}|1> = B1 pibar(c_{-1}) |1>_{shifted}
    FockVector sm1 = apply_vertex_mode(spec_screening(), -1, vac);
    FockVector expect = a_rep_apply(AElement::c(1), FockVector::vacuum(w.ket_shifted())).scaled(sc::B1());
    CHECK(sm1 == expect);
}

TEST_CASE("generating vectors and the A-condition") {
    Weight w = Weight::generic();
    // xi = (1,2,-3): sum xi = 0, no ratio hits -1; k=1 coefficient is an A-vector
    std::vector<RingElem> xi{RingElem(1), RingElem(2), RingElem(-3)};
    auto r = xi_eta_vector(xi, {}, 1, w);
    CHECK(r.condition_holds);
    CHECK(is_A_vector(r.vec));
    // xi = (1): condition fails and the vector is not A
    auto r1 = xi_eta_vector({RingElem(1)}, {}, 1, w);
    CHECK_FALSE(r1.condition_holds);
    CHECK_FALSE(is_A_vector(r1.vec));
    // k = 0 piece: product of the zero-mode weights
    auto r0 = xi_eta_vector({RingElem(1)}, {}, 0, w);
    CHECK(r0.vec == FockVector::vacuum(w).scaled(RingElem::u(1) + RingElem::u(-1)));
    // mixed t/s with a condition-compatible choice: xi=(2), eta=(-1) is regular
    auto rm = xi_eta_vector({RingElem(2)}, {RingElem(-1)}, 1, w);
    CHECK_FALSE(rm.condition_holds);  // odd-k condition needs sum xi^1 = 0
    // the (1,-1) pair of the t-string hits the kinematic pole
    CHECK_THROWS_AS(xi_eta_vector({RingElem(1), RingElem(-1)}, {}, 1, w), std::domain_error);
}

TEST_CASE("algebra relations") {
    for (const char* rel : {"fqt_limit", "res_slambda"}) {
        auto rep = verify_relation(rel, 0);
        INFO(rel, " ", rep.detail);
        CHECK(rep.pass);
    }
    for (const char* rel : {"ss_prod", "ssigma_prod", "slambda_prod"}) {
        auto rep = verify_relation(rel, 2);
        INFO(rel, " ", rep.detail);
        CHECK(rep.pass);
    }
    for (const char* rel : {"ts_zero", "tt_pole"}) {
        auto rep = verify_relation(rel, 1);
        INFO(rel, " ", rep.detail);
        CHECK(rep.pass);
    }
}
