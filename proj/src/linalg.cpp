#include "redpair/linalg.hpp"

#include <cassert>

namespace redpair {

namespace {

// Gaussian elimination with exact pivots. Returns the echelon form,
// the permutation sign, and the pivot columns.
struct Echelon {
    QMatrix m;
    int sign = 1;
    std::vector<size_t> pivot_cols;
};

Echelon echelon(QMatrix m) {
    Echelon e;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            e.sign = -e.sign;
        }
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

Rat mat_det(const QMatrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    assert(m[0].size() == n);
    Echelon e = echelon(m);
    if (e.pivot_cols.size() < n) return 0;
    Rat d = e.sign;
    for (size_t i = 0; i < n; ++i) d *= e.m[i][i];
    return d;
}

std::optional<VecQ> mat_solve(const QMatrix& m, const VecQ& rhs) {
    size_t n = m.size();
    assert(rhs.size() == n && (n == 0 || m[0].size() == n));
    QMatrix aug = m;
    for (size_t i = 0; i < n; ++i) aug[i].push_back(rhs[i]);
    Echelon e = echelon(std::move(aug));
    if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols.back() >= n)) return std::nullopt;
    VecQ x(n, Rat(0));
    for (size_t i = n; i-- > 0;) {
        Rat s = e.m[i][n];
        for (size_t j = i + 1; j < n; ++j) s -= e.m[i][j] * x[j];
        x[i] = s / e.m[i][i];
    }
    return x;
}

std::optional<QMatrix> mat_inverse(const QMatrix& m) {
    size_t n = m.size();
    QMatrix inv(n, VecQ(n, Rat(0)));
    for (size_t c = 0; c < n; ++c) {
        VecQ e(n, Rat(0));
        e[c] = 1;
        auto col = mat_solve(m, e);
        if (!col) return std::nullopt;
        for (size_t r = 0; r < n; ++r) inv[r][c] = (*col)[r];
    }
    return inv;
}

Rat det(const std::vector<LinForm>& forms) {
    QMatrix m;
    for (const auto& f : forms) m.push_back(f.as_vecq());
    return mat_det(m);
}

std::optional<VecQ> solve_in_basis(const std::vector<LinForm>& basis, const VecQ& v) {
    // v = sum s_i gamma_i is B^T s = v with rows gamma_i.
    size_t k = basis.size();
    assert(v.size() == k);
    QMatrix bt(k, VecQ(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) bt[j][i] = Rat(basis[i][j]);
    return mat_solve(bt, v);
}

size_t form_rank(const std::vector<LinForm>& forms) {
    QMatrix m;
    for (const auto& f : forms) m.push_back(f.as_vecq());
    return echelon(std::move(m)).pivot_cols.size();
}

std::optional<VecQ> express_in_span(const std::vector<LinForm>& forms, const LinForm& target) {
    // Least-structure approach: solve A^T c = target with A rows = forms,
    // using echelon on the transposed system with all columns.
    size_t n = forms.size();
    size_t k = target.rank();
    QMatrix aug(k, VecQ(n + 1));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < k; ++i) aug[i][j] = Rat(forms[j][i]);
    for (size_t i = 0; i < k; ++i) aug[i][n] = Rat(target[i]);
    Echelon e = echelon(std::move(aug));
    // Inconsistent iff a pivot lands in the rhs column.
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;
    VecQ c(n, Rat(0));
    for (size_t r = e.pivot_cols.size(); r-- > 0;) {
        size_t pc = e.pivot_cols[r];
        Rat s = e.m[r][n];
        for (size_t j = pc + 1; j < n; ++j) s -= e.m[r][j] * c[j];
        c[pc] = s / e.m[r][pc];
    }
    return c;
}

namespace {

// One Fourier-Motzkin elimination step on rows representing
// sum_j a_j x_j (strict > 0 when strict=true, >= 0 otherwise).
// Rows are rational; variable `var` is eliminated.
struct FMRow {
    VecQ a;
    bool strict;
};

std::optional<std::vector<FMRow>> fm_eliminate(const std::vector<FMRow>& rows, size_t var) {
    std::vector<FMRow> zero, pos, neg;
    for (const auto& r : rows) {
        if (r.a[var] == 0)
            zero.push_back(r);
        else if (r.a[var] > 0)
            pos.push_back(r);
        else
            neg.push_back(r);
    }
    std::vector<FMRow> out = zero;
    for (const auto& p : pos)
        for (const auto& n : neg) {
            // p: x_var > -p'/p_var ; n: x_var < -n'/|n_var|; combine.
            FMRow c;
            c.a.assign(p.a.size(), Rat(0));
            Rat pv = p.a[var], nv = -n.a[var];
            for (size_t j = 0; j < p.a.size(); ++j) c.a[j] = p.a[j] * nv + n.a[j] * pv;
            c.a[var] = 0;
            c.strict = p.strict || n.strict;
            bool all_zero = true;
            for (const auto& v : c.a)
                if (v != 0) {
                    all_zero = false;
                    break;
                }
            if (all_zero) {
                if (c.strict) return std::nullopt;  // 0 > 0
                continue;
            }
            out.push_back(std::move(c));
        }
    return out;
}

// Back-substitutes a feasible value for `var` given the other
// coordinates already fixed in x.
std::optional<Rat> fm_pick(const std::vector<FMRow>& rows, size_t var, const VecQ& x) {
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : rows) {
        if (r.a[var] == 0) continue;
        Rat rest = 0;
        for (size_t j = 0; j < r.a.size(); ++j)
            if (j != var) rest += r.a[j] * x[j];
        Rat bound = -rest / r.a[var];
        if (r.a[var] > 0) {
            if (!has_lo || bound > lo || (bound == lo && r.strict)) {
                lo = bound;
                lo_strict = r.strict;
            }
            has_lo = true;
        } else {
            if (!has_hi || bound < hi || (bound == hi && r.strict)) {
                hi = bound;
                hi_strict = r.strict;
            }
            has_hi = true;
        }
    }
    if (!has_lo && !has_hi) return Rat(0);
    if (!has_lo) return hi - 1;
    if (!has_hi) return lo + 1;
    if (lo < hi) return (lo + hi) / 2;
    if (lo == hi && !lo_strict && !hi_strict) return lo;
    return std::nullopt;
}

std::optional<VecQ> fm_feasible(std::vector<FMRow> rows, size_t dim) {
    // Check trivially contradictory rows first.
    std::vector<std::vector<FMRow>> levels;
    for (const auto& r : rows) {
        bool all_zero = true;
        for (const auto& v : r.a)
            if (v != 0) all_zero = false;
        if (all_zero && r.strict) return std::nullopt;
    }
    levels.push_back(rows);
    for (size_t v = dim; v-- > 1;) {
        auto next = fm_eliminate(levels.back(), v);
        if (!next) return std::nullopt;
        levels.push_back(std::move(*next));
    }
    VecQ x(dim, Rat(0));
    for (size_t v = 0; v < dim; ++v) {
        auto val = fm_pick(levels[dim - 1 - v], v, x);
        if (!val) return std::nullopt;
        x[v] = *val;
    }
    return x;
}

}  // namespace

std::optional<std::vector<Int>> positive_functional(const std::vector<LinForm>& forms) {
    if (forms.empty()) return std::vector<Int>{};
    size_t k = forms[0].rank();
    if (k == 0) return std::nullopt;
    std::vector<FMRow> rows;
    for (const auto& f : forms) {
        if (f.is_zero()) return std::nullopt;
        rows.push_back({f.as_vecq(), true});
    }
    auto x = fm_feasible(std::move(rows), k);
    if (!x) return std::nullopt;
    // Scale the rational solution to an integer vector.
    Int lcm = 1;
    for (const auto& v : *x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<Int> xi(k);
    for (size_t i = 0; i < k; ++i) xi[i] = numerator((*x)[i]) * (lcm / denominator((*x)[i]));
    for (const auto& f : forms)
        if (f.pair_int(xi) <= 0)
            throw std::logic_error("positive_functional: infeasible elimination result");
    return xi;
}

bool cone_contains(const std::vector<LinForm>& gens, const VecQ& t) {
    // Feasibility of sum s_i gamma_i = t, s >= 0, by affine
    // Fourier-Motzkin over s. Row layout: coefficients of s_0..s_{n-1}
    // followed by the constant term, meaning a.s + const >= 0.
    size_t n = gens.size();
    size_t k = t.size();
    std::vector<FMRow> affine;
    for (size_t i = 0; i < n; ++i) {
        FMRow r;
        r.a.assign(n + 1, Rat(0));  // last entry = constant term
        r.a[i] = 1;
        r.strict = false;
        affine.push_back(std::move(r));
    }
    for (size_t c = 0; c < k; ++c) {
        FMRow ge;
        ge.a.assign(n + 1, Rat(0));
        for (size_t i = 0; i < n; ++i) ge.a[i] = Rat(gens[i][c]);
        ge.a[n] = -t[c];
        ge.strict = false;
        FMRow le;
        le.a = ge.a;
        for (auto& v : le.a) v = -v;
        le.strict = false;
        affine.push_back(std::move(ge));
        affine.push_back(std::move(le));
    }
    // Eliminate s_0..s_{n-1}; a row then reads c >= 0 with c constant.
    std::vector<FMRow> cur = std::move(affine);
    for (size_t v = n; v-- > 0;) {
        std::vector<FMRow> zero, pos, neg;
        for (const auto& r : cur) {
            if (r.a[v] == 0)
                zero.push_back(r);
            else if (r.a[v] > 0)
                pos.push_back(r);
            else
                neg.push_back(r);
        }
        std::vector<FMRow> out = zero;
        for (const auto& p : pos)
            for (const auto& ng : neg) {
                FMRow c;
                c.a.assign(n + 1, Rat(0));
                Rat pv = p.a[v], nv = -ng.a[v];
                for (size_t j = 0; j <= n; ++j) c.a[j] = p.a[j] * nv + ng.a[j] * pv;
                c.a[v] = 0;
                c.strict = p.strict || ng.strict;
                out.push_back(std::move(c));
            }
        cur = std::move(out);
    }
    for (const auto& r : cur) {
        const Rat& c = r.a[n];
        if (c < 0 || (c == 0 && r.strict)) return false;
    }
    return true;
}

}  // namespace redpair
