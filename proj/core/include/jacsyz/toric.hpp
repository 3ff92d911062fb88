#pragma once

#include <random>

#include "jacsyz/jacobian.hpp"
#include "jacsyz/par.hpp"
#include "jacsyz/predict.hpp"
#include "jacsyz/report.hpp"

namespace jacsyz {

// f = g * x0...xn for a degree-e hypersurface W : g = 0 in P^n.
template <class F>
struct ToricModel {
    int n = 0;  // projective dimension; nvars = n+1
    int e = 0;  // deg g
    Polynomial<F> g, h, f;

    const Ring<F>& ring() const { return g.ring(); }
    int d() const { return e + n + 1; }

    static ToricModel make(int n, const Polynomial<F>& g) {
        const Ring<F>& R = g.ring();
        if (n < 2 || R.nvars != n + 1)
            throw std::invalid_argument("toric model needs n >= 2 and g in n+1 variables");
        auto deg = g.homogeneous_degree();
        if (g.is_zero() || !deg || *deg < 1)
            throw std::invalid_argument("toric model needs nonzero homogeneous g of degree >= 1");
        std::uint64_t ch = R.field.characteristic();
        if (ch != 0 && ch <= static_cast<std::uint64_t>(*deg + n + 1))
            throw std::domain_error("toric model requires characteristic 0 or p > e+n+1");
        ToricModel m;
        m.n = n;
        m.e = *deg;
        m.g = g;
        m.h = Polynomial<F>::constant(R, R.field.one());
        for (int i = 0; i <= n; ++i) m.h = m.h * Polynomial<F>::variable(R, i);
        m.f = m.g * m.h;
        return m;
    }
};

struct HyperplaneDependenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace toricdetail {

// inverse of a small dense matrix over the field; throws on singular input
template <class F>
std::vector<std::vector<typename F::Elem>> invert_matrix(
    const F& K, std::vector<std::vector<typename F::Elem>> a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<typename F::Elem>> inv(n, std::vector<typename F::Elem>(n, K.zero()));
    for (int i = 0; i < n; ++i) inv[i][i] = K.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!K.is_zero(a[r][col])) { piv = r; break; }
        if (piv < 0) throw HyperplaneDependenceError("hyperplane forms are linearly dependent");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        auto s = K.inv(a[col][col]);
        for (int j = 0; j < n; ++j) {
            a[col][j] = K.mul(a[col][j], s);
            inv[col][j] = K.mul(inv[col][j], s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || K.is_zero(a[r][col])) continue;
            auto c = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] = K.sub(a[r][j], K.mul(c, a[col][j]));
                inv[r][j] = K.sub(inv[r][j], K.mul(c, inv[col][j]));
            }
        }
    }
    return inv;
}

}  // namespace toricdetail

// Normalize arbitrary independent hyperplanes l_0..l_n to coordinates: the
// model for g(l^{-1} x) * x0...xn. Throws HyperplaneDependenceError when the
// coefficient matrix of the l_j is singular (condition on the hyperplanes).
template <class F>
ToricModel<F> make_model_from_hyperplanes(const std::vector<Polynomial<F>>& lines,
                                          const Polynomial<F>& g) {
    const Ring<F>& R = g.ring();
    int n = R.nvars - 1;
    if (static_cast<int>(lines.size()) != n + 1)
        throw std::invalid_argument("need exactly n+1 hyperplane forms");
    std::vector<std::vector<typename F::Elem>> L(n + 1,
                                                 std::vector<typename F::Elem>(n + 1, R.field.zero()));
    for (int j = 0; j <= n; ++j) {
        require_same_ring(lines[j].ring(), R);
        if (lines[j].is_zero() || lines[j].homogeneous_degree() != std::optional<int>(1))
            throw std::invalid_argument("hyperplane forms must be linear");
        for (const auto& t : lines[j].terms())
            for (int k = 0; k <= n; ++k)
                if (t.mono.exp[k] == 1) L[j][k] = t.coeff;
    }
    auto Linv = toricdetail::invert_matrix(R.field, L);
    return ToricModel<F>::make(n, substitute_linear(g, Linv));
}

// g'_i = x_i * dg/dx_i + g
template <class F>
Polynomial<F> gprime(const ToricModel<F>& m, int i) {
    if (i < 0 || i > m.n) throw std::out_of_range("gprime index out of range");
    return Polynomial<F>::variable(m.ring(), i) * derivative(m.g, i) + m.g;
}

// The syzygy with slot i = x_i g'_j and slot j = -x_j g'_i, in S^{n+1}.
template <class F>
ModuleElement<F> rho_prime(const ToricModel<F>& m, int i, int j) {
    if (!(0 <= i && i < j && j <= m.n)) throw std::out_of_range("rho_prime needs 0 <= i < j <= n");
    const Ring<F>& R = m.ring();
    FreeModule<F> mod = FreeModule<F>::make(R, std::vector<int>(m.n + 1, 0));
    auto v = ModuleElement<F>::zero(mod);
    v.comps[i] = Polynomial<F>::variable(R, i) * gprime(m, j);
    v.comps[j] = -(Polynomial<F>::variable(R, j) * gprime(m, i));
    return v;
}

template <class F>
std::vector<ModuleElement<F>> all_rho_primes(const ToricModel<F>& m) {
    std::vector<ModuleElement<F>> out;
    for (int i = 0; i <= m.n; ++i)
        for (int j = i + 1; j <= m.n; ++j) out.push_back(rho_prime(m, i, j));
    return out;
}

// g'_0..g'_n form a regular sequence iff their only common zero is trivial.
template <class F>
bool check_regular_sequence(const ToricModel<F>& m, const TermOrder& base = TermOrder::grevlex()) {
    std::vector<Polynomial<F>> gp;
    for (int i = 0; i <= m.n; ++i) gp.push_back(gprime(m, i));
    auto gb = buchberger(ideal_elements(gp), ModuleOrder::top(base));
    return is_zero_dimensional(gb);
}

struct EdgeIndex {
    std::vector<int> I;  // proper subset of 0..n, ascending
    bool operator==(const EdgeIndex&) const = default;
};

struct NCResult {
    bool ok = false;
    std::vector<EdgeIndex> failing;
};

// V = W u H_0 u ... u H_n is a normal crossing divisor iff no coordinate edge
// E_I is tangent to W; edge I fails iff the ideal <x_i : i in I> + <g> +
// <g_j : j not in I> has a nontrivial zero. I = {} tests smoothness of W.
template <class F>
NCResult check_normal_crossing(const ToricModel<F>& m, const TermOrder& base = TermOrder::grevlex()) {
    const Ring<F>& R = m.ring();
    int nv = m.n + 1;
    int full = (1 << nv) - 1;
    std::vector<char> pass(full, 0);
    std::vector<Polynomial<F>> partials;
    for (int j = 0; j < nv; ++j) partials.push_back(derivative(m.g, j));
    parallel_for(full, [&](int mask) {
        std::vector<Polynomial<F>> gens;
        for (int i = 0; i < nv; ++i)
            if (mask & (1 << i)) gens.push_back(Polynomial<F>::variable(R, i));
        gens.push_back(m.g);
        for (int j = 0; j < nv; ++j)
            if (!(mask & (1 << j)) && !partials[j].is_zero()) gens.push_back(partials[j]);
        auto gb = buchberger(ideal_elements(gens), ModuleOrder::top(base));
        pass[mask] = is_zero_dimensional(gb) ? 1 : 0;
    });
    NCResult res;
    res.ok = true;
    for (int mask = 0; mask < full; ++mask) {
        if (pass[mask]) continue;
        res.ok = false;
        EdgeIndex e;
        for (int i = 0; i < nv; ++i)
            if (mask & (1 << i)) e.I.push_back(i);
        res.failing.push_back(std::move(e));
    }
    return res;
}

struct GenericityError : std::runtime_error {
    int attempts;
    explicit GenericityError(int attempts)
        : std::runtime_error("genericity not found within " + std::to_string(attempts) +
                             " attempts"),
          attempts(attempts) {}
};

template <class F>
struct RandomModelResult {
    ToricModel<F> model;
    int attempts = 0;
};

// Rejection-sample a dense degree-e form with integer coefficients in
// [-bound, bound] until the normal crossing check passes. Deterministic for a
// fixed seed.
template <class F>
RandomModelResult<F> random_generic(const Ring<F>& ring, int n, int e, std::uint64_t seed,
                                    int bound, int max_attempts = 32) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    if (ring.nvars != n + 1) throw std::invalid_argument("ring/model dimension mismatch");
    std::mt19937_64 rng(seed);
    auto monos = monomials_of_degree(n + 1, e);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<typename Polynomial<F>::Term> terms;
        for (const auto& mo : monos) {
            long c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
            if (c != 0) terms.push_back({mo, ring.field.from_long(c)});
        }
        auto g = Polynomial<F>::from_terms(ring, std::move(terms));
        if (g.is_zero() || g.homogeneous_degree() != std::optional<int>(e)) continue;
        auto m = ToricModel<F>::make(n, g);
        if (check_normal_crossing(m).ok) return {std::move(m), attempt};
    }
    throw GenericityError(max_attempts);
}

template <class F>
Prediction predict_toric(const ToricModel<F>& m) {
    return predict_toric(m.n, m.e);
}

template <class F>
VerificationReport verify_theorem1(const ToricModel<F>& m,
                                   const TermOrder& base = TermOrder::grevlex()) {
    VerificationReport rep;
    auto nc = check_normal_crossing(m, base);
    rep.normal_crossing = nc.ok;
    for (auto& e : nc.failing) rep.failing_edges.push_back(e.I);
    rep.regular_sequence = check_regular_sequence(m, base);
    auto hs = Hypersurface<F>::make(m.f);
    auto [res, table] = milnor_resolution(hs, base);
    rep.computed = table;
    rep.predicted = predict_toric(m).table;
    rep.match = (*rep.computed == *rep.predicted);
    rep.exponents = d0(hs, base).exponents;
    return rep;
}

template <class F>
VerificationReport verify_corollary1(const ToricModel<F>& m,
                                     const TermOrder& base = TermOrder::grevlex()) {
    VerificationReport rep;
    auto nc = check_normal_crossing(m, base);
    rep.normal_crossing = nc.ok;
    for (auto& e : nc.failing) rep.failing_edges.push_back(e.I);
    rep.regular_sequence = check_regular_sequence(m, base);

    const Ring<F>& R = m.ring();
    auto hs = Hypersurface<F>::make(m.f);
    auto rhos = all_rho_primes(m);
    Cor1Checks c;
    c.annihilation = true;
    for (const auto& rho : rhos) {
        Polynomial<F> acc(R);
        for (int i = 0; i <= m.n; ++i) acc = acc + rho.comps[i] * hs.partials[i];
        if (!acc.is_zero()) c.annihilation = false;
    }
    auto rep0 = d0(hs, base);
    auto ord = ModuleOrder::top(base);
    auto gb_rho = buchberger(rhos, ord);
    c.computed_in_rho = true;
    for (const auto& g : rep0.generators)
        if (!membership(g, gb_rho)) c.computed_in_rho = false;
    c.rho_in_computed = true;
    if (rep0.generators.empty()) {
        c.rho_in_computed = false;
    } else {
        auto gb_d0 = buchberger(rep0.generators, ord);
        for (const auto& rho : rhos)
            if (!membership(rho, gb_d0)) c.rho_in_computed = false;
    }
    c.degrees_ok = true;
    for (int dg : rep0.exponents)
        if (dg != m.e + 1) c.degrees_ok = false;
    c.count_ok = (rep0.m == binomial(m.n + 1, 2));
    rep.exponents = rep0.exponents;
    rep.cor1 = c;
    rep.match = rep.hypotheses_ok() && c.all();
    return rep;
}

}  // namespace jacsyz
