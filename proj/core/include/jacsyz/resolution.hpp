#pragma once

#include "jacsyz/betti.hpp"
#include "jacsyz/groebner.hpp"
#include "jacsyz/linalg.hpp"

namespace jacsyz {

template <class F>
struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<Polynomial<F>> a;  // row-major

    static PolyMatrix zero(const Ring<F>& ring, int rows, int cols) {
        return PolyMatrix{rows, cols,
                          std::vector<Polynomial<F>>(static_cast<size_t>(rows) * cols,
                                                     Polynomial<F>::zero(ring))};
    }
    Polynomial<F>& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Polynomial<F>& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    void erase_row(int r) {
        std::vector<Polynomial<F>> b;
        b.reserve(a.size());
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            for (int j = 0; j < cols; ++j) b.push_back(std::move(at(i, j)));
        }
        a = std::move(b);
        --rows;
    }
    void erase_col(int c) {
        std::vector<Polynomial<F>> b;
        b.reserve(a.size());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (j != c) b.push_back(std::move(at(i, j)));
        a = std::move(b);
        --cols;
    }
};

// Chain F_0 <- F_1 <- ... with diffs[k] : F_{k+1} -> F_k (columns = images of
// basis vectors). Exact in positive steps by construction; "minimal" means no
// differential entry has a nonzero constant term.
template <class F>
struct GradedResolution {
    Ring<F> ring{};
    std::vector<FreeModule<F>> modules;
    std::vector<PolyMatrix<F>> diffs;
    bool minimal = false;
};

struct ResolveOptions {
    int max_length = 0;          // number of syzygy steps past d_0; 0 = nvars
    bool minimal_layers = true;  // prune each syzygy layer to minimal generators
    TermOrder base = TermOrder::grevlex();
};

// A minimal homogeneous generating set of the submodule generated by gens,
// sorted by graded degree. Zero inputs are dropped.
template <class F>
std::vector<ModuleElement<F>> min_generators(const std::vector<ModuleElement<F>>& gens,
                                             const TermOrder& base = TermOrder::grevlex()) {
    std::vector<ModuleElement<F>> cands;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!is_homogeneous_element(g)) throw std::invalid_argument("non-homogeneous generator");
        cands.push_back(g);
    }
    if (cands.empty()) return {};
    std::stable_sort(cands.begin(), cands.end(),
                     [](const ModuleElement<F>& a, const ModuleElement<F>& b) {
                         return *graded_degree(a) < *graded_degree(b);
                     });
    const FreeModule<F>& mod = cands.front().mod;
    gbdetail::GBEngine<F> eng(mod, ModuleOrder::top(base), false, true);
    std::vector<ModuleElement<F>> out;
    for (const auto& c : cands)
        if (eng.add_if_new(c)) out.push_back(c);
    // canonical scaling for the survivors
    for (auto& v : out) {
        auto vec = gbdetail::flatten(v, ModuleOrder::top(base));
        gbdetail::normalize_joint(mod.ring.field, vec, static_cast<gbdetail::TV<F>*>(nullptr));
        v = gbdetail::unflatten(mod, vec);
    }
    return out;
}

// Free resolution of coker(gens : F_1 -> F_0) by iterated syzygy computation.
template <class F>
GradedResolution<F> resolve(const std::vector<ModuleElement<F>>& gens, ResolveOptions opt = {}) {
    if (gens.empty()) throw std::invalid_argument("resolve needs generators");
    const FreeModule<F>& ambient = gens.front().mod;
    const Ring<F>& R = ambient.ring;
    int max_length = opt.max_length > 0 ? opt.max_length : R.nvars;

    GradedResolution<F> res;
    res.ring = R;
    res.modules.push_back(ambient);

    std::vector<ModuleElement<F>> cur = gens;
    for (int k = 0; k < max_length; ++k) {
        std::vector<int> shifts;
        for (const auto& v : cur) {
            if (v.is_zero()) throw std::invalid_argument("zero generator in resolve");
            auto d = graded_degree(v);
            if (!d) throw std::invalid_argument("non-homogeneous generator in resolve");
            shifts.push_back(*d);
        }
        FreeModule<F> Fk = FreeModule<F>::make(R, shifts);
        PolyMatrix<F> dk = PolyMatrix<F>::zero(R, res.modules.back().rank, Fk.rank);
        for (int c = 0; c < Fk.rank; ++c)
            for (int r = 0; r < dk.rows; ++r) dk.at(r, c) = cur[c].comps[r];
        res.modules.push_back(Fk);
        res.diffs.push_back(std::move(dk));
        if (k + 1 == max_length) break;
        std::vector<ModuleElement<F>> syz = syzygies(cur, opt.base);
        if (opt.minimal_layers) syz = min_generators(syz, opt.base);
        if (syz.empty()) break;
        cur = std::move(syz);
    }
    return res;
}

// Cancel unit (nonzero constant) differential entries: lowest step, then
// lowest row, then lowest column, until none remain. Homotopy equivalence;
// the result carries the unique minimal Betti data.
template <class F>
GradedResolution<F> minimize(GradedResolution<F> res) {
    const F& K = res.ring.field;
    for (;;) {
        bool found = false;
        for (size_t k = 0; k < res.diffs.size() && !found; ++k) {
            PolyMatrix<F>& d = res.diffs[k];
            for (int r = 0; r < d.rows && !found; ++r) {
                for (int c = 0; c < d.cols && !found; ++c) {
                    auto u = d.at(r, c).constant_coeff();
                    if (K.is_zero(u)) continue;
                    found = true;
                    // Schur complement on d, then drop row r of d_{k+1} and
                    // column r of d_{k-1} (both are forced by d o d = 0)
                    for (int i = 0; i < d.rows; ++i) {
                        if (i == r) continue;
                        for (int j = 0; j < d.cols; ++j) {
                            if (j == c) continue;
                            if (d.at(i, c).is_zero() || d.at(r, j).is_zero()) continue;
                            d.at(i, j) =
                                d.at(i, j) - (d.at(i, c) * d.at(r, j)).scaled(K.inv(u));
                        }
                    }
                    d.erase_row(r);
                    d.erase_col(c);
                    if (k + 1 < res.diffs.size()) res.diffs[k + 1].erase_row(c);
                    if (k > 0) res.diffs[k - 1].erase_col(r);
                    auto& Mk = res.modules[k];
                    Mk.shifts.erase(Mk.shifts.begin() + r);
                    Mk.rank -= 1;
                    auto& Mk1 = res.modules[k + 1];
                    Mk1.shifts.erase(Mk1.shifts.begin() + c);
                    Mk1.rank -= 1;
                }
            }
        }
        if (!found) break;
    }
    // trim trailing zero modules
    while (res.modules.size() > 1 && res.modules.back().rank == 0) {
        res.modules.pop_back();
        res.diffs.pop_back();
    }
    res.minimal = true;
    return res;
}

template <class F>
BettiTable betti_table(const GradedResolution<F>& res) {
    if (!res.minimal) throw std::invalid_argument("betti_table needs a minimized resolution");
    BettiTable t;
    for (size_t k = 0; k < res.modules.size(); ++k)
        for (int s : res.modules[k].shifts) t.add(static_cast<int>(k), s);
    return t;
}

// Structural checks: shift-compatible homogeneous entries, d o d = 0, and (if
// flagged minimal) no constant entries. Throws std::logic_error on violation.
template <class F>
void validate_resolution(const GradedResolution<F>& res) {
    const F& K = res.ring.field;
    for (size_t k = 0; k < res.diffs.size(); ++k) {
        const auto& d = res.diffs[k];
        if (d.rows != res.modules[k].rank || d.cols != res.modules[k + 1].rank)
            throw std::logic_error("differential shape mismatch");
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c) {
                const auto& p = d.at(r, c);
                if (p.is_zero()) continue;
                auto deg = p.homogeneous_degree();
                if (!deg || *deg != res.modules[k + 1].shifts[c] - res.modules[k].shifts[r])
                    throw std::logic_error("differential entry has wrong degree");
                if (res.minimal && !K.is_zero(p.constant_coeff()))
                    throw std::logic_error("minimal resolution has a constant entry");
            }
    }
    for (size_t k = 0; k + 1 < res.diffs.size(); ++k) {
        const auto& A = res.diffs[k];
        const auto& B = res.diffs[k + 1];
        for (int r = 0; r < A.rows; ++r)
            for (int c = 0; c < B.cols; ++c) {
                Polynomial<F> s(res.ring);
                for (int m = 0; m < A.cols; ++m) s = s + A.at(r, m) * B.at(m, c);
                if (!s.is_zero()) throw std::logic_error("consecutive differentials do not compose to zero");
            }
    }
}

// Alternating-sum identity between a minimal Betti table of S/I and the
// Hilbert function of S/I, compared as truncated series up to degree cap.
template <class F>
bool hilbert_consistent(const BettiTable& table, const std::vector<ModuleElement<F>>& ideal_gens,
                        int cap, const OracleOptions& opt = {}) {
    int nvars = ideal_gens.front().mod.ring.nvars;
    std::vector<long long> lhs(cap + 1, 0);
    for (const auto& [ke, c] : table.entries) {
        if (ke.second > cap) continue;
        lhs[ke.second] += (ke.first % 2 == 0 ? c : -c);
    }
    // (1-x)^nvars * sum HF(u) x^u
    std::vector<long long> binom(nvars + 1, 0);
    binom[0] = 1;
    for (int i = 1; i <= nvars; ++i)
        for (int j = i; j >= 1; --j) binom[j] += binom[j - 1];
    OracleOptions o = opt;
    o.degree_cap = std::max(o.degree_cap, cap);
    std::vector<long long> hf(cap + 1, 0);
    for (int u = 0; u <= cap; ++u) hf[u] = hilbert_function(ideal_gens, u, o);
    std::vector<long long> rhs(cap + 1, 0);
    for (int u = 0; u <= cap; ++u)
        for (int j = 0; j <= nvars && u + j <= cap; ++j)
            rhs[u + j] += (j % 2 == 0 ? 1 : -1) * binom[j] * hf[u];
    return lhs == rhs;
}

}  // namespace jacsyz
