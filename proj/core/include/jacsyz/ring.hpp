#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacsyz/fields.hpp"
#include "jacsyz/monomial.hpp"

namespace jacsyz {

// S = k[x0..x_{nvars-1}] with its coefficient field.
template <class F>
struct Ring {
    int nvars = 0;
    F field{};

    static Ring make(int nvars, F field = F{}) {
        if (nvars < 3) throw std::invalid_argument("ring needs at least 3 variables");
        return Ring{nvars, std::move(field)};
    }

    bool operator==(const Ring& o) const { return nvars == o.nvars && field == o.field; }
    bool operator!=(const Ring& o) const { return !(*this == o); }
};

template <class F>
void require_same_ring(const Ring<F>& a, const Ring<F>& b) {
    if (a != b) throw std::invalid_argument("ring mismatch between operands");
}

// Sparse multivariate polynomial. Terms are kept strictly descending in the
// canonical storage order, with no zero coefficients, so equal polynomials
// have identical representations.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    struct Term {
        Monomial mono;
        Elem coeff;
    };

    Polynomial() = default;
    explicit Polynomial(Ring<F> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring<F>& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring<F>& ring, const Elem& c) {
        Polynomial p(ring);
        if (!ring.field.is_zero(c)) p.terms_.push_back({Monomial::one(ring.nvars), c});
        return p;
    }
    static Polynomial monomial(const Ring<F>& ring, Monomial m, const Elem& c) {
        if (m.nvars() != ring.nvars) throw std::invalid_argument("monomial has wrong nvars");
        Polynomial p(ring);
        if (!ring.field.is_zero(c)) p.terms_.push_back({std::move(m), c});
        return p;
    }
    static Polynomial variable(const Ring<F>& ring, int i) {
        if (i < 0 || i >= ring.nvars) throw std::out_of_range("variable index out of range");
        return monomial(ring, Monomial::var(ring.nvars, i), ring.field.one());
    }
    static Polynomial from_terms(const Ring<F>& ring, std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
            return canonical_cmp(a.mono, b.mono) > 0;
        });
        Polynomial p(ring);
        for (auto& t : raw) {
            if (t.mono.nvars() != ring.nvars) throw std::invalid_argument("monomial has wrong nvars");
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff = ring.field.add(p.terms_.back().coeff, t.coeff);
                if (ring.field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!ring.field.is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const Ring<F>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    // -1 for the zero polynomial
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    // the common degree, if homogeneous and nonzero
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return terms_.front().mono.degree();
    }

    Polynomial homogeneous_component(int t) const {
        Polynomial p(ring_);
        for (const auto& term : terms_)
            if (term.mono.degree() == t) p.terms_.push_back(term);
        return p;
    }

    Elem coeff_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return ring_.field.zero();
    }
    Elem constant_coeff() const { return coeff_of(Monomial::one(ring_.nvars)); }

    Polynomial operator-() const {
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono, ring_.field.neg(t.coeff)});
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        const F& K = a.ring_.field;
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size()) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                int c = canonical_cmp(a.terms_[i].mono, b.terms_[j].mono);
                if (c > 0) {
                    r.terms_.push_back(a.terms_[i++]);
                } else if (c < 0) {
                    r.terms_.push_back(b.terms_[j++]);
                } else {
                    Elem s = K.add(a.terms_[i].coeff, b.terms_[j].coeff);
                    if (!K.is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                    ++i, ++j;
                }
            }
        }
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        const F& K = a.ring_.field;
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                acc.push_back({mono_mul(ta.mono, tb.mono), K.mul(ta.coeff, tb.coeff)});
        return from_terms(a.ring_, std::move(acc));
    }

    Polynomial scaled(const Elem& c) const {
        const F& K = ring_.field;
        Polynomial p(ring_);
        if (K.is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono, K.mul(t.coeff, c)});
        return p;
    }

    Polynomial shifted(const Monomial& m) const {
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({mono_mul(t.mono, m), t.coeff});
        return p;
    }

    bool operator==(const Polynomial& o) const {
        if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) ||
                !ring_.field.equal(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    Ring<F> ring_{};
    std::vector<Term> terms_;
};

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial<F> r = Polynomial<F>::constant(p.ring(), p.ring().field.one());
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// formal partial derivative with respect to x_i
template <class F>
Polynomial<F> derivative(const Polynomial<F>& p, int i) {
    if (i < 0 || i >= p.ring().nvars) throw std::out_of_range("derivative index out of range");
    const F& K = p.ring().field;
    std::vector<typename Polynomial<F>::Term> acc;
    for (const auto& t : p.terms()) {
        if (t.mono.exp[i] == 0) continue;
        Monomial m = t.mono;
        int e = m.exp[i];
        m.exp[i] -= 1;
        acc.push_back({std::move(m), K.mul(t.coeff, K.from_long(e))});
    }
    return Polynomial<F>::from_terms(p.ring(), std::move(acc));
}

// Checks sum_i x_i * df/dx_i == deg(f) * f. Requires homogeneous input and,
// over a prime field, p > deg(f) (the relation degenerates otherwise).
template <class F>
bool euler_check(const Polynomial<F>& f) {
    auto deg = f.homogeneous_degree();
    if (f.is_zero() || !deg) throw std::invalid_argument("euler_check needs a nonzero homogeneous polynomial");
    std::uint64_t ch = f.ring().field.characteristic();
    if (ch != 0 && ch <= static_cast<std::uint64_t>(*deg))
        throw std::domain_error("euler_check requires characteristic 0 or p > deg f");
    Polynomial<F> lhs(f.ring());
    for (int i = 0; i < f.ring().nvars; ++i)
        lhs = lhs + Polynomial<F>::variable(f.ring(), i) * derivative(f, i);
    return lhs == f.scaled(f.ring().field.from_long(*deg));
}

// Substitute x_k -> sum_j M[k][j] * x_j.
template <class F>
Polynomial<F> substitute_linear(const Polynomial<F>& p,
                                const std::vector<std::vector<typename F::Elem>>& M) {
    const Ring<F>& R = p.ring();
    int n = R.nvars;
    if (static_cast<int>(M.size()) != n)
        throw std::invalid_argument("substitution matrix has wrong size");
    std::vector<Polynomial<F>> images;
    images.reserve(n);
    for (int k = 0; k < n; ++k) {
        if (static_cast<int>(M[k].size()) != n)
            throw std::invalid_argument("substitution matrix has wrong size");
        std::vector<typename Polynomial<F>::Term> row;
        for (int j = 0; j < n; ++j)
            if (!R.field.is_zero(M[k][j])) row.push_back({Monomial::var(n, j), M[k][j]});
        images.push_back(Polynomial<F>::from_terms(R, std::move(row)));
    }
    Polynomial<F> out(R);
    for (const auto& t : p.terms()) {
        Polynomial<F> acc = Polynomial<F>::constant(R, t.coeff);
        for (int k = 0; k < n; ++k)
            for (int e = 0; e < t.mono.exp[k]; ++e) acc = acc * images[k];
        out = out + acc;
    }
    return out;
}

using PolyQ = Polynomial<Rationals>;
using PolyP = Polynomial<PrimeField>;

}  // namespace jacsyz
