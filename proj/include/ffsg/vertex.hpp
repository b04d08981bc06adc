#pragma once

#include <functional>
#include <string>

#include "ffsg/fock.hpp"
#include "ffsg/symrat.hpp"

namespace ffsg {

// Normal-ordered exponential vertex operator: optional u_eff power and constant
// prefactor, optional delta shift, and the exponent coefficient of d^nu_k z^{-k}.
struct VertexSpec {
    std::string name;  // cache key; must identify the coefficient function
    std::function<RingElem(int nu, int k)> coef;
    int u_power = 0;
    RingElem const_prefactor = RingElem(1);
    int delta_shift = 0;
};

// The standard currents.
const VertexSpec& spec_lambda(int nu);       // lambda_{+-}(z)
const VertexSpec& spec_screening();          // S(z), with delta
const VertexSpec& spec_sigma();              // sigma(z), with delta
const VertexSpec& spec_s_current();          // s(z) = :exp sum D_k z^-k / k:
const VertexSpec& spec_psibar();             // Psi-bar(z) (creation side, u^{+1})
const VertexSpec& spec_lambda_plus_psi_T();  // transpose of e^{-i pi a}lambda_+(z)Psi(z)

// Mode j of the vertex applied to a ket: picks level l -> l - j.
FockVector apply_vertex_mode(const VertexSpec& spec, int j, const FockVector& v);

// t_j = u_eff (lambda_-)_j + u_eff^{-1} (lambda_+)_j on kets.
FockVector apply_t_mode(int j, const FockVector& v);

// (Psi-bar t)_k = sum_{l>=0} Psibar_{-l} t_{l+k}, truncated by the ket level.
FockVector apply_psibar_t(int k, const FockVector& v);

// --- Wick engine -------------------------------------------------------------

// <h| t(x_1)..t(x_nt) s(y_1)..s(y_ns) |h'> at weight w, exact.
// Variables 0..nt-1 are the x's, nt..nt+ns-1 the y's.
SymRat wick_matrix_element(const AElement& h, const AElement& hbar, const Weight& w, int nt,
                           int ns = 0);

// Independent oracle: brute-force mode expansion with intermediate levels <= M.
// Returns the coefficient of each x-monomial (exponent tuple) reachable in the
// truncation window.
std::map<XExp, RingElem> series_oracle(const AElement& h, const AElement& hbar, const Weight& w,
                                       int nt, int M);

// Check that the oracle truncation agrees with the closed form on the complete
// window (exact comparison after clearing denominators).
bool oracle_agrees(const SymRat& J, const std::map<XExp, RingElem>& oracle, int nt, int M,
                   int ket_level);

// --- generating vectors ------------------------------------------------------

struct XiEtaResult {
    FockVector vec;
    bool condition_holds;  // Eq. condition up to k
};

// z^k coefficient of t(z xi_1)..t(z xi_r) s(z eta_1)..s(z eta_s)|1>_w.
// Throws std::domain_error on a kinematic pole (xi ratios hitting +-1).
XiEtaResult xi_eta_vector(const std::vector<RingElem>& xi, const std::vector<RingElem>& eta, int k,
                          const Weight& w);

// --- algebra relations -------------------------------------------------------

struct RelationReport {
    std::string name;
    bool pass = false;
    std::string detail;
};

// rel in {fqt_limit, tt_pole, ts_zero, res_slambda, slambda_prod, ss_prod,
//         ssigma_prod}; cutoff bounds the sandwich/basis levels.
RelationReport verify_relation(const std::string& rel, int cutoff);

}  // namespace ffsg
