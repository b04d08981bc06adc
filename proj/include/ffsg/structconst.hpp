#pragma once

#include "ffsg/ringelem.hpp"

namespace ffsg {

// Structure constants of the t=-q current algebra, all exact in v = q^{1/2}.
// k <= 0 throws std::invalid_argument unless noted.
namespace sc {

// A^{+-}_k = (+-)^k (v^k - v^-k)(v^k - (-)^k v^-k); defined for any k != 0.
RingElem A(int sign, int k);

// B_1 = v + v^-1
RingElem B1();

// B_k = (v^k - (-)^k v^-k)/k
RingElem Bk(int k);

// F^n_k = (-)^(k-1) (v^k - (-)^n v^-k)/(v^k + (-)^n v^-k); depends on n mod 2.
RingElem Fnk(int n, int k);

// gamma_k in exponential form: B1 (u v^(k-1) + u^-1 v^-(k-1)); any integer k.
RingElem gamma(int k);

// kappa_k: 0 for odd k, -2/(v^k - v^-k) for even k.
RingElem kappa(int k);

}  // namespace sc
}  // namespace ffsg
