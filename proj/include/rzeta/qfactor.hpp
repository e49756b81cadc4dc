// Univariate factorization over Q (squarefree decomposition, modular
// factorization, Hensel lifting, recombination).
#pragma once

#include "rzeta/upoly.hpp"

#include <vector>

namespace rzeta {

struct QFactor {
    QPoly factor;  // monic irreducible over Q
    long exponent;
};

// Complete factorization p = constant * prod factor_i^exponent_i.
// Requires p nonzero; constant input yields empty factor list.
struct QFactorization {
    Rat constant;
    std::vector<QFactor> factors;
};

QFactorization factor_qpoly(const QPoly& p);

// Convenience: is p irreducible over Q (degree >= 1)?
bool is_irreducible_q(const QPoly& p);

}  // namespace rzeta
