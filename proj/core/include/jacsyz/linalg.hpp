#pragma once

#include <map>

#include "jacsyz/module.hpp"

namespace jacsyz {

// All monomials of the given total degree, in canonical descending order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur = Monomial::one(nvars);
    // recursive enumeration, then one sort for the canonical order
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            cur.exp[var] = left;
            out.push_back(cur);
            cur.exp[var] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur.exp[var] = e;
            self(self, var + 1, left - e);
        }
        cur.exp[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; });
    return out;
}

inline long long dim_of_degree(int nvars, int degree) {
    if (degree < 0) return 0;
    long long r = 1;
    for (int i = 1; i <= nvars - 1; ++i) r = r * (degree + i) / i;
    return r;
}

namespace ladetail {

// sparse row, columns strictly ascending
using RowQ = std::vector<std::pair<int, mpz_class>>;
using RowP = std::vector<std::pair<int, std::uint64_t>>;

inline void strip_content(RowQ& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
    if (row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
}

// dst = a*dst - b*src (sparse merge over Z)
inline RowQ row_combine(const RowQ& dst, const mpz_class& a, const mpz_class& b, const RowQ& src) {
    RowQ out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.emplace_back(dst[i].first, mpz_class(a * dst[i].second));
            ++i;
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, mpz_class(-b * src[j].second));
            ++j;
        } else {
            mpz_class v = a * dst[i].second - b * src[j].second;
            if (v != 0) out.emplace_back(dst[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

// fraction-free elimination: integer cross-multiplication with content
// stripping after every update
inline long long rank_rows(std::vector<RowQ> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RowQ& a, const RowQ& b) { return a.size() < b.size(); });
    std::map<int, RowQ> pivots;
    long long rank = 0;
    for (auto& row : rows) {
        strip_content(row);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            row = row_combine(row, it->second.front().second, row.front().second, it->second);
            strip_content(row);
        }
        if (!row.empty()) {
            pivots.emplace(row.front().first, std::move(row));
            ++rank;
        }
    }
    return rank;
}

inline long long rank_rows_fp(std::vector<RowP> rows, const PrimeField& K) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RowP& a, const RowP& b) { return a.size() < b.size(); });
    std::map<int, RowP> pivots;  // pivot rows are monic
    long long rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            const RowP& p = it->second;
            std::uint64_t c = row.front().second;
            RowP out;
            out.reserve(row.size() + p.size());
            size_t i = 0, j = 0;
            while (i < row.size() || j < p.size()) {
                if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    out.push_back(row[i++]);
                } else if (i == row.size() || p[j].first < row[i].first) {
                    out.emplace_back(p[j].first, K.neg(K.mul(c, p[j].second)));
                    ++j;
                } else {
                    std::uint64_t v = K.sub(row[i].second, K.mul(c, p[j].second));
                    if (v) out.emplace_back(row[i].first, v);
                    ++i, ++j;
                }
            }
            row = std::move(out);
        }
        if (!row.empty()) {
            std::uint64_t s = K.inv(row.front().second);
            for (auto& [c, v] : row) v = K.mul(v, s);
            pivots.emplace(row.front().first, std::move(row));
            ++rank;
        }
    }
    return rank;
}

// column indexing of the degree-tau piece of a free module
struct ColumnIndex {
    std::vector<std::vector<Monomial>> basis;  // per slot
    std::vector<int> offset;
    int total = 0;

    ColumnIndex(const std::vector<int>& shifts, int nvars, int tau) {
        offset.resize(shifts.size());
        for (size_t q = 0; q < shifts.size(); ++q) {
            offset[q] = total;
            basis.push_back(monomials_of_degree(nvars, tau - shifts[q]));
            total += static_cast<int>(basis.back().size());
        }
    }
    int col(int q, const Monomial& m) const {
        const auto& b = basis[q];
        auto it = std::lower_bound(b.begin(), b.end(), m, [](const Monomial& a, const Monomial& x) {
            return canonical_cmp(a, x) > 0;
        });
        return offset[q] + static_cast<int>(it - b.begin());
    }
};

template <class F>
struct RowBuild;

template <>
struct RowBuild<Rationals> {
    using Row = RowQ;
    static Row make(const Rationals&, const ModuleElement<Rationals>& v, const Monomial& m,
                    const ColumnIndex& ci) {
        Row row;
        mpz_class den_lcm = 1;
        for (const auto& comp : v.comps)
            for (const auto& t : comp.terms()) {
                mpz_class d = t.coeff.get_den();
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            }
        for (int q = 0; q < v.mod.rank; ++q)
            for (const auto& t : v.comps[q].terms()) {
                mpq_class scaled = t.coeff * den_lcm;
                row.emplace_back(ci.col(q, mono_mul(t.mono, m)), mpz_class(scaled.get_num()));
            }
        std::sort(row.begin(), row.end());
        return row;
    }
};

template <>
struct RowBuild<PrimeField> {
    using Row = RowP;
    static Row make(const PrimeField&, const ModuleElement<PrimeField>& v, const Monomial& m,
                    const ColumnIndex& ci) {
        Row row;
        for (int q = 0; q < v.mod.rank; ++q)
            for (const auto& t : v.comps[q].terms())
                row.emplace_back(ci.col(q, mono_mul(t.mono, m)), t.coeff);
        std::sort(row.begin(), row.end());
        return row;
    }
};

template <class F>
long long rank_dispatch(std::vector<typename RowBuild<F>::Row> rows, const F& K);

template <>
inline long long rank_dispatch<Rationals>(std::vector<RowQ> rows, const Rationals&) {
    return rank_rows(std::move(rows));
}
template <>
inline long long rank_dispatch<PrimeField>(std::vector<RowP> rows, const PrimeField& K) {
    return rank_rows_fp(std::move(rows), K);
}

}  // namespace ladetail

struct OracleOptions {
    int degree_cap = 64;
};

// Dimension over the base field of the degree-tau graded piece of the
// submodule generated by elems (tau = graded degree in the ambient module).
// Pure linear algebra, no Groebner machinery.
template <class F>
long long graded_piece_dimension(const std::vector<ModuleElement<F>>& elems, int tau,
                                 const OracleOptions& opt = {}) {
    if (elems.empty()) return 0;
    const FreeModule<F>& mod = elems.front().mod;
    const F& K = mod.ring.field;
    if (tau > opt.degree_cap) throw std::domain_error("oracle degree cap exceeded");
    ladetail::ColumnIndex ci(mod.shifts, mod.ring.nvars, tau);
    std::vector<typename ladetail::RowBuild<F>::Row> rows;
    for (const auto& v : elems) {
        if (v.mod != mod) throw std::invalid_argument("mixed modules");
        if (v.is_zero()) throw std::invalid_argument("zero generator");
        auto d = graded_degree(v);
        if (!d) throw std::invalid_argument("non-homogeneous generator");
        for (const auto& m : monomials_of_degree(mod.ring.nvars, tau - *d))
            rows.push_back(ladetail::RowBuild<F>::make(K, v, m, ci));
    }
    return ladetail::rank_dispatch<F>(std::move(rows), K);
}

// Dimension of {(A_i) : sum A_i gens_i = 0} with A_i homogeneous of degree
// t - (D_i - D_min), D_i the graded degree of gens_i. For generators of equal
// degree this makes t the common degree of the coefficient tuple.
template <class F>
long long graded_kernel_dimension(const std::vector<ModuleElement<F>>& gens, int t,
                                  const OracleOptions& opt = {}) {
    if (gens.empty()) return 0;
    if (t < 0) throw std::invalid_argument("negative degree");
    const FreeModule<F>& mod = gens.front().mod;
    const F& K = mod.ring.field;
    int dmin = 0;
    bool first = true;
    std::vector<int> degs(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].mod != mod) throw std::invalid_argument("mixed modules");
        if (gens[i].is_zero()) throw std::invalid_argument("zero generator");
        auto d = graded_degree(gens[i]);
        if (!d) throw std::invalid_argument("non-homogeneous generator");
        degs[i] = *d;
        dmin = first ? *d : std::min(dmin, *d);
        first = false;
    }
    int tau = t + dmin;
    if (tau > opt.degree_cap) throw std::domain_error("oracle degree cap exceeded");
    ladetail::ColumnIndex ci(mod.shifts, mod.ring.nvars, tau);
    std::vector<typename ladetail::RowBuild<F>::Row> rows;
    long long domain = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        auto monos = monomials_of_degree(mod.ring.nvars, tau - degs[i]);
        domain += static_cast<long long>(monos.size());
        for (const auto& m : monos)
            rows.push_back(ladetail::RowBuild<F>::make(K, gens[i], m, ci));
    }
    return domain - ladetail::rank_dispatch<F>(std::move(rows), K);
}

// dim_k (S/I)_t for the ideal generated by rank-1 gens, by linear algebra
template <class F>
long long hilbert_function(const std::vector<ModuleElement<F>>& gens, int t,
                           const OracleOptions& opt = {}) {
    if (t < 0) throw std::invalid_argument("negative degree");
    if (gens.empty()) throw std::invalid_argument("hilbert_function needs generators");
    const FreeModule<F>& mod = gens.front().mod;
    if (mod.rank != 1 || mod.shifts != std::vector<int>{0})
        throw std::invalid_argument("hilbert_function expects ideal generators");
    if (t > opt.degree_cap) throw std::domain_error("oracle degree cap exceeded");
    std::vector<ModuleElement<F>> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    long long st = dim_of_degree(mod.ring.nvars, t);
    if (nonzero.empty()) return st;
    long long it = 0;
    bool any = false;
    for (const auto& g : nonzero) {
        auto d = graded_degree(g);
        if (d && *d <= t) any = true;
    }
    if (any) it = graded_piece_dimension(nonzero, t, opt);
    return st - it;
}

}  // namespace jacsyz
