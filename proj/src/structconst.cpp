#include "ffsg/structconst.hpp"

namespace ffsg {
namespace sc {

namespace {
void require_positive(int k, const char* who) {
    if (k <= 0) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}
int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }
}  // namespace

RingElem A(int sign, int k) {
    if (k == 0) throw std::invalid_argument("A: k must be nonzero");
    RingElem f1 = RingElem::v(k) - RingElem::v(-k);
    RingElem f2 = RingElem::v(k) - RingElem(parity_sign(k)) * RingElem::v(-k);
    RingElem s((sign > 0) ? 1 : parity_sign(k));
    return s * f1 * f2;
}

RingElem B1() { return RingElem::v(1) + RingElem::v(-1); }

RingElem Bk(int k) {
    require_positive(k, "Bk");
    return (RingElem::v(k) - RingElem(parity_sign(k)) * RingElem::v(-k)) / RingElem(k);
}

RingElem Fnk(int n, int k) {
    require_positive(k, "Fnk");
    RingElem e(parity_sign(n));
    RingElem numr = RingElem::v(k) - e * RingElem::v(-k);
    RingElem denr = RingElem::v(k) + e * RingElem::v(-k);
    RingElem s(parity_sign(k - 1));
    return s * numr / denr;
}

RingElem gamma(int k) {
    return B1() * (RingElem::monomial(k - 1, 1) + RingElem::monomial(1 - k, -1));
}

RingElem kappa(int k) {
    require_positive(k, "kappa");
    if (k % 2 == 1) return RingElem(0);
    return RingElem(-2) / (RingElem::v(k) - RingElem::v(-k));
}

}  // namespace sc
}  // namespace ffsg
