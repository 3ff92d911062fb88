#pragma once

#include "jacsyz/betti.hpp"

namespace jacsyz {

struct Prediction {
    BettiTable table;
    std::vector<int> exponents;  // predicted D_0(f) generator degrees, ascending
    long long N = 0;             // number of minimal generators
};

long long binomial(int n, int k);

// Smooth hypersurface of degree d in P^n: c_k = C(n+1,k), e_k = k(d-1).
Prediction predict_smooth(int n, int d);

// Normal crossing arrangement of d > n+1 hyperplanes in P^n:
// c_0 = 1, c_1 = n+1, c_k = C(d+k-n-4, k-2) * C(d-1, n+1-k),
// e_0 = 0, e_1 = d-1, e_k = 2d+k-n-3   (2 <= k <= n+1).
Prediction predict_nc_arrangement(int n, int d);

// Product of a generic degree-e hypersurface with the n+1 coordinate
// hyperplanes: c_k = C(n+1,k), e_0 = 0, e_1 = e+n, e_k = ke+n+1.
Prediction predict_toric(int n, int e);

}  // namespace jacsyz
