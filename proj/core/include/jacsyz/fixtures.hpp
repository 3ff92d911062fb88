#pragma once

#include "jacsyz/toric.hpp"

namespace jacsyz {

// g = x0^e + ... + xn^e
template <class F>
ToricModel<F> builtin_fermat(const F& field, int n, int e) {
    auto R = Ring<F>::make(n + 1, field);
    std::vector<typename Polynomial<F>::Term> terms;
    for (int i = 0; i <= n; ++i) terms.push_back({Monomial::var(n + 1, i, e), field.one()});
    return ToricModel<F>::make(n, Polynomial<F>::from_terms(R, std::move(terms)));
}

// triangle + transversal conic: f = x0*x1*x2*(x0^2+x1^2+x2^2)
template <class F>
ToricModel<F> builtin_example1_main(const F& field) {
    return builtin_fermat(field, 2, 2);
}

// triangle + conic tangent to all three sides
template <class F>
ToricModel<F> builtin_example1_tangent(const F& field) {
    auto R = Ring<F>::make(3, field);
    auto g = parse_poly<F>("x0^2+x1^2+x2^2-2*x0*x1-2*x1*x2-2*x0*x2", R);
    return ToricModel<F>::make(2, g);
}

template <class F>
struct HyperplaneInput {
    std::vector<Polynomial<F>> lines;
    Polynomial<F> g;
};

// three concurrent lines + the conic; the line forms are dependent
template <class F>
HyperplaneInput<F> builtin_example1_degenerate(const F& field) {
    auto R = Ring<F>::make(3, field);
    HyperplaneInput<F> in;
    in.lines = {parse_poly<F>("x0-x1", R), parse_poly<F>("x1-x2", R), parse_poly<F>("x0-x2", R)};
    in.g = parse_poly<F>("x0^2+x1^2+x2^2", R);
    return in;
}

// the degenerate curve itself: (x0-x1)*(x1-x2)*(x0-x2)*(x0^2+x1^2+x2^2)
template <class F>
Polynomial<F> builtin_example1_degenerate_curve(const F& field) {
    auto in = builtin_example1_degenerate(field);
    return in.lines[0] * in.lines[1] * in.lines[2] * in.g;
}

}  // namespace jacsyz
