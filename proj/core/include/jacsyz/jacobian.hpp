#pragma once

#include "jacsyz/resolution.hpp"

namespace jacsyz {

// A (reduced, by caller's promise) projective hypersurface f = 0 with its
// cached partial derivatives.
template <class F>
struct Hypersurface {
    Polynomial<F> f;
    int degree = 0;
    std::vector<Polynomial<F>> partials;

    static Hypersurface make(const Polynomial<F>& f) {
        auto d = f.homogeneous_degree();
        if (f.is_zero() || !d || *d < 1)
            throw std::invalid_argument("hypersurface needs a nonzero homogeneous f of degree >= 1");
        Hypersurface h;
        h.f = f;
        h.degree = *d;
        for (int i = 0; i < f.ring().nvars; ++i) h.partials.push_back(derivative(f, i));
        return h;
    }

    const Ring<F>& ring() const { return f.ring(); }
};

// The n+1 partial derivatives as generators of the Jacobian ideal.
template <class F>
std::vector<ModuleElement<F>> jacobian_ideal(const Hypersurface<F>& h) {
    bool all_zero = true;
    for (const auto& p : h.partials)
        if (!p.is_zero()) all_zero = false;
    if (all_zero) throw std::invalid_argument("all partial derivatives vanish");
    return ideal_elements(h.partials);
}

template <class F>
struct SyzygyReport {
    std::vector<ModuleElement<F>> generators;  // in S^{n+1}, zero shifts
    std::vector<int> exponents;                // sorted degrees d_1 <= ... <= d_m
    int m = 0;
};

// Minimal generators and exponents of D_0(f) = {rho : sum rho_i f_i = 0}.
template <class F>
SyzygyReport<F> d0(const Hypersurface<F>& h, const TermOrder& base = TermOrder::grevlex()) {
    const Ring<F>& R = h.ring();
    auto gens = jacobian_ideal(h);
    auto syz = min_generators(syzygies(gens, base), base);
    FreeModule<F> plain = FreeModule<F>::make(R, std::vector<int>(R.nvars, 0));
    SyzygyReport<F> rep;
    for (const auto& s : syz) {
        auto v = ModuleElement<F>::make(plain, s.comps);
        // soundness: the relation must hold exactly
        Polynomial<F> acc(R);
        for (int i = 0; i < R.nvars; ++i) acc = acc + v.comps[i] * h.partials[i];
        if (!acc.is_zero()) throw std::logic_error("computed syzygy does not annihilate the partials");
        rep.exponents.push_back(*graded_degree(v));
        rep.generators.push_back(std::move(v));
    }
    std::sort(rep.exponents.begin(), rep.exponents.end());
    rep.m = static_cast<int>(rep.generators.size());
    return rep;
}

// Minimal graded free resolution of the Milnor algebra M(f) = S/J_f and its
// Betti table.
template <class F>
std::pair<GradedResolution<F>, BettiTable> milnor_resolution(const Hypersurface<F>& h,
                                                             const TermOrder& base = TermOrder::grevlex()) {
    ResolveOptions opt;
    opt.max_length = h.ring().nvars;  // Hilbert bound n+1
    opt.base = base;
    auto res = minimize(resolve(jacobian_ideal(h), opt));
    BettiTable t = betti_table(res);
    return {std::move(res), std::move(t)};
}

}  // namespace jacsyz
