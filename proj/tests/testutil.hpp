#pragma once

#include <random>

#include "jacsyz/jacsyz.hpp"

namespace testutil {

using namespace jacsyz;

// homogeneous polynomial of exactly the given degree (may come back zero for
// unlucky draws; callers resample)
template <class F>
Polynomial<F> random_homogeneous(std::mt19937_64& rng, const Ring<F>& R, int deg, int nterms,
                                 long cmax = 5) {
    auto monos = monomials_of_degree(R.nvars, deg);
    std::vector<typename Polynomial<F>::Term> ts;
    for (int i = 0; i < nterms; ++i) {
        const auto& m = monos[rng() % monos.size()];
        long c = static_cast<long>(rng() % (2 * cmax + 1)) - cmax;
        if (c) ts.push_back({m, R.field.from_long(c)});
    }
    return Polynomial<F>::from_terms(R, std::move(ts));
}

template <class F>
Polynomial<F> random_homogeneous_nonzero(std::mt19937_64& rng, const Ring<F>& R, int deg,
                                         int nterms, long cmax = 5) {
    for (;;) {
        auto p = random_homogeneous(rng, R, deg, nterms, cmax);
        if (!p.is_zero()) return p;
    }
}

// not necessarily homogeneous
template <class F>
Polynomial<F> random_poly(std::mt19937_64& rng, const Ring<F>& R, int maxdeg, int nterms,
                          long cmax = 5) {
    Polynomial<F> p(R);
    for (int i = 0; i < nterms; ++i) {
        int d = static_cast<int>(rng() % (maxdeg + 1));
        p = p + random_homogeneous(rng, R, d, 1, cmax);
    }
    return p;
}

}  // namespace testutil
