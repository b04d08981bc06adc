#pragma once

#include <string>

#include "ffsg/fock.hpp"
#include "ffsg/vertex.hpp"

namespace ffsg {

// S_k on kets (delta-shifted module); thin wrapper over the vertex machinery.
FockVector apply_Sk(int k, const FockVector& v);

// Single and double screening operators acting on kets. The mode indices are
// read from the vector's (m,n) weight tag, which must be special.
FockVector apply_Sigma(const FockVector& v);
FockVector apply_W(const FockVector& v);

// Q^(s) = W^{s/2} or Sigma W^{(s-1)/2}; requires s = n mod 2 on the source
// module unless unchecked (the Qbar variant of the construction).
FockVector apply_Q(int s, const FockVector& v, bool unchecked = false);

// weak A-vector test: Q^(s) D_k v = 0 for 0 < k <= level, with Q read off the
// (m,n,s) triple of the module v lives in.
bool is_weak_A_vector(const FockVector& v, int s);

struct SingularVectorResult {
    FockVector vec;      // ket in Fbar_{-m,-n}
    AElement a_element;  // N^(s)_{mn}
    int level = 0;       // s(m-n+s)
};

// Q^(s)|1>_{-m,-n+2s}; throws if the result vanishes (parameter range) or the
// parity condition fails.
SingularVectorResult singular_vector(int m, int n, int s);

// S_{-kvec} Qbar^(t) |1>_{m, m+s+t}: a representative of the cosingular vector
// in Fbar_{mn} with n = m + s - t - 2*nu determined by the inputs.
FockVector cosingular_representative(int m, int s, int t, const std::vector<int>& kvec);

// kappa^(s)_m by the (s-1)-fold constant-term formula.
RingElem kappa_sm(int s, int m);
// closed forms: k! prod F^m_{2i-1} (s=2k) and (-)^k k! prod F^{m+1}_{2i} (s=2k+1)
RingElem kappa_sm_closed(int s, int m);

// C^(nu)_{kvec}: constant-term coefficient of S_{-kvec}|1> at level 0.
RingElem c_coeff(int nu, const std::vector<int>& kvec);

// --- structure probe ---------------------------------------------------------

struct ProbeLevelRow {
    int level = 0;
    long dim = 0;         // dim (F_{mn})_level
    long dimA = 0;        // dim of the A-subspace at this level
    long rank_W = 0;      // rank of the right action of W out of this level
    long rank_W_A = 0;    // same, restricted to the A-subspace
    bool W_max_rank = false;
    bool W_max_rank_A = false;
    long ker_Sigma = 0;   // right-action complex at this nod
    long im_Sigma = 0;    // image arriving at this nod
    long cohomology = 0;  // full Fock complex
    long cohomology_A = 0;
};

struct ProbeReport {
    int m = 0, n = 0;
    std::vector<mpq_class> samples;  // rational v samples used
    std::vector<ProbeLevelRow> rows;
    bool samples_agree = true;
    bool qt_commutes_on_mn = true;    // [Q^(s_mn), t_j] = 0 on Fbar tagged (m,n)
    bool qt_nonzero_off_point = true; // and nonzero at generic weight
    int s_mn = 0;
};

// Conjecture probes at three fixed rational v samples.
ProbeReport structure_probe(int m, int n, int max_level);

// the paper's threshold s_{mn}
int s_mn_value(int m, int n);

}  // namespace ffsg
