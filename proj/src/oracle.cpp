#include "redpair/oracle.hpp"

#include <algorithm>

#include "redpair/errors.hpp"
#include "redpair/linalg.hpp"

namespace redpair {

namespace {

// Inequality a.x + b >= 0 in the free coordinates.
struct Ineq {
    VecQ a;
    Rat b;
};

Rat ineq_eval(const Ineq& q, const VecQ& x) {
    Rat s = q.b;
    for (size_t i = 0; i < q.a.size(); ++i) s += q.a[i] * x[i];
    return s;
}

// Enumerates vertices of {x : a.x + b >= 0 for all ineqs} by solving
// every dim-subset of tight hyperplanes. Throws when some vertex is
// tight on more than dim distinct hyperplanes (degenerate t).
std::vector<VecQ> enumerate_vertices(const std::vector<Ineq>& ineqs, size_t dim) {
    std::vector<VecQ> verts;
    size_t n = ineqs.size();
    std::vector<size_t> idx(dim);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t chosen) {
        if (chosen == dim) {
            QMatrix m(dim, VecQ(dim));
            VecQ rhs(dim);
            for (size_t r = 0; r < dim; ++r) {
                m[r] = ineqs[idx[r]].a;
                rhs[r] = -ineqs[idx[r]].b;
            }
            auto x = mat_solve(m, rhs);
            if (!x) return;
            for (const auto& q : ineqs)
                if (ineq_eval(q, *x) < 0) return;
            if (std::find(verts.begin(), verts.end(), *x) == verts.end()) verts.push_back(*x);
            return;
        }
        for (size_t i = start; i + (dim - chosen) <= n; ++i) {
            idx[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    if (dim > 0) rec(0, 0);
    return verts;
}

// Constraint rows tight at x. At a regular value every fiber vertex
// is tight on exactly dim rows; more means t sits on a wall.
size_t tight_count(const std::vector<Ineq>& ineqs, const VecQ& x) {
    size_t n = 0;
    for (const auto& q : ineqs)
        if (ineq_eval(q, x) == 0) ++n;
    return n;
}

// Exact volume of the polytope with the given inequalities and
// (precomputed) vertices. Cone decomposition from the lex-min vertex
// over the facets not containing it; facets recurse after eliminating
// one coordinate, which keeps every quantity rational.
Rat polytope_volume(const std::vector<Ineq>& ineqs, std::vector<VecQ> verts, size_t dim) {
    if (verts.size() < dim + 1) return 0;
    if (dim == 0) return 1;
    if (dim == 1) {
        Rat lo = verts[0][0], hi = verts[0][0];
        for (const auto& v : verts) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return hi - lo;
    }
    std::sort(verts.begin(), verts.end());
    const VecQ& w = verts.front();
    Rat vol = 0;
    for (const auto& q : ineqs) {
        Rat hw = ineq_eval(q, w);
        if (hw == 0) continue;  // w on the facet: no cone over it
        std::vector<VecQ> facet_verts;
        for (const auto& v : verts)
            if (ineq_eval(q, v) == 0) facet_verts.push_back(v);
        if (facet_verts.size() < dim) continue;  // not a facet
        // Eliminate a coordinate l with a_l != 0: on the facet,
        // x_l = (-b - sum_{j!=l} a_j x_j) / a_l.
        size_t l = 0;
        while (q.a[l] == 0) ++l;
        std::vector<Ineq> sub;
        for (const auto& r : ineqs) {
            if (&r == &q) continue;
            Ineq s;
            s.a.assign(dim - 1, Rat(0));
            Rat f = r.a[l] / q.a[l];
            size_t c = 0;
            for (size_t j = 0; j < dim; ++j) {
                if (j == l) continue;
                s.a[c++] = r.a[j] - f * q.a[j];
            }
            s.b = r.b - f * q.b;
            sub.push_back(std::move(s));
        }
        std::vector<VecQ> sub_verts;
        for (const auto& v : facet_verts) {
            VecQ p;
            for (size_t j = 0; j < dim; ++j)
                if (j != l) p.push_back(v[j]);
            sub_verts.push_back(std::move(p));
        }
        Rat face_vol = polytope_volume(sub, std::move(sub_verts), dim - 1);
        vol += rat_abs(hw) / (Rat(dim) * rat_abs(q.a[l])) * face_vol;
    }
    return vol;
}

}  // namespace

Rat fiber_volume(const std::vector<LinForm>& weights, const VecQ& t) {
    size_t k = t.size();
    size_t n = weights.size();
    if (!positive_functional(weights))
        throw input_error("fiber_volume: weights not polarizable, fiber unbounded");
    if (form_rank(weights) < k)
        throw input_error("fiber_volume: weights do not span, moment image is degenerate");

    // Basic subset: first independent k weights; the rest are free.
    std::vector<LinForm> basic;
    std::vector<size_t> basic_idx, free_idx;
    for (size_t i = 0; i < n; ++i) {
        if (basic.size() < k) {
            std::vector<LinForm> trial = basic;
            trial.push_back(weights[i]);
            if (form_rank(trial) == trial.size()) {
                basic = std::move(trial);
                basic_idx.push_back(i);
                continue;
            }
        }
        free_idx.push_back(i);
    }
    if (basic.size() != k) throw std::logic_error("fiber_volume: no basic subset");
    Rat dB = rat_abs(det(basic));

    size_t m = n - k;
    auto s0 = solve_in_basis(basic, t);
    if (!s0) throw std::logic_error("fiber_volume: basic subset is singular");
    if (m == 0) {
        for (const auto& s : *s0) {
            if (s == 0) throw input_error("fiber_volume: degenerate t (fiber vertex at zero)");
            if (s < 0) return 0;
        }
        return 1 / dB;
    }

    // s_basic(x) = s0 - sum_j x_j * coords(gamma_free_j); inequalities
    // are x >= 0 and s_basic(x) >= 0.
    std::vector<VecQ> cols;
    for (size_t j : free_idx) {
        auto c = solve_in_basis(basic, weights[j].as_vecq());
        if (!c) throw std::logic_error("fiber_volume: basic subset is singular");
        cols.push_back(*c);
    }
    std::vector<Ineq> ineqs;
    for (size_t j = 0; j < m; ++j) {
        Ineq q;
        q.a.assign(m, Rat(0));
        q.a[j] = 1;
        q.b = 0;
        ineqs.push_back(std::move(q));
    }
    for (size_t i = 0; i < k; ++i) {
        Ineq q;
        q.a.assign(m, Rat(0));
        for (size_t j = 0; j < m; ++j) q.a[j] = -cols[j][i];
        q.b = (*s0)[i];
        ineqs.push_back(std::move(q));
    }

    auto verts = enumerate_vertices(ineqs, m);
    for (const auto& v : verts)
        if (tight_count(ineqs, v) > m)
            throw input_error("fiber_volume: degenerate t (over-tight vertex at " + vec_str(v) +
                              ")");
    Rat vol = polytope_volume(ineqs, std::move(verts), m);
    return vol / dB;
}

Rat fixed_point_enumeration(const SpaceModel& space, const EquivariantClass& cls, const Rat& t) {
    if (space.rank() != 1)
        throw input_error("fixed_point_enumeration: rank-one sphere models only");
    validate_class(space, cls);
    int n = (int)space.half_dim();
    Rat sum = 0;
    for (const auto& p : space.points()) {
        for (const auto& w : p.weights)
            if (!(w[0] == 1 || w[0] == -1))
                throw input_error("fixed_point_enumeration: weights must be +-1");
        const MPoly& r = cls.at(p.id);
        if (r.is_zero()) continue;
        if (r.terms().size() != 1 || r.terms().begin()->first[0] != n - 1)
            throw input_error("fixed_point_enumeration: restriction at '" + p.id +
                              "' is not a monomial of degree half_dim - 1");
        Rat c = r.terms().begin()->second;
        int eps = 1;
        for (const auto& w : p.weights)
            if (w[0] < 0) eps = -eps;
        if (p.moment[0] == t)
            throw input_error("fixed_point_enumeration: t hits an apex");
        if (p.moment[0] < t) sum += c * eps;
    }
    return sum;
}

Rat sphere_power_closed_form(const std::vector<int>& ks) {
    int n = (int)ks.size();
    int m = 0, total = 0;
    for (int k : ks) {
        if (k % 2 != 0) ++m;
        total += k;
    }
    if (total != n - 1)
        throw input_error("sphere_power_closed_form: exponents must sum to n-1");
    Int sum = 0;
    for (int s = 0; s <= m; ++s)
        for (int r = 0; r <= n - m; ++r) {
            if (2 * (s + r) >= n) continue;
            Int term = binomial(m, s) * binomial(n - m, r);
            sum += (r % 2 == 1) ? term : -term;
        }
    return Rat(sum);
}

OracleReport grid_convolution_check(const Density1D& a, const Rat& a_lo, const Rat& a_hi,
                                    const Density1D& b, const Rat& t, const Rat& step,
                                    const Rat& engine_value, double tolerance) {
    if (a_hi <= a_lo) throw input_error("grid_convolution_check: empty window");
    Rat sum = 0;
    for (Rat x = a_lo + step / 2; x < a_hi; x += step) {
        Rat xs = x;
        auto va = a(xs);
        auto vb = b(t - xs);
        if (!va || !vb) {
            // Wall sample: nudge inside the cell and retry once.
            xs = x + step / 7;
            va = a(xs);
            vb = b(t - xs);
            if (!va || !vb) continue;
        }
        sum += *va * *vb;
    }
    sum *= step;
    OracleReport rep;
    rep.engine_value = engine_value;
    rep.oracle_float = sum.convert_to<double>();
    rep.method = "grid_convolution";
    rep.tolerance = tolerance;
    rep.pass = std::abs(engine_value.convert_to<double>() - rep.oracle_float) <= tolerance;
    return rep;
}

}  // namespace redpair
