#include "redpair/pairing.hpp"

#include <algorithm>
#include <set>

#include "redpair/errors.hpp"
#include "redpair/linalg.hpp"

namespace redpair {

std::optional<std::vector<Int>> polarizable(const std::vector<LinForm>& weights) {
    return positive_functional(weights);
}

std::pair<std::vector<LinForm>, int> flip_form(const std::vector<LinForm>& weights,
                                               const std::vector<Int>& xi) {
    std::vector<LinForm> out;
    int flips = 0;
    for (const auto& w : weights) {
        Int v = w.pair_int(xi);
        if (v == 0)
            throw input_error("flip_form: <" + w.str() + ", xi> = 0, xi not generic");
        if (v < 0) {
            out.push_back(w.negated());
            ++flips;
        } else {
            out.push_back(w);
        }
    }
    return {out, flips};
}

DecomposedPairing build_pairing(const SpaceModel& space, const EquivariantClass& cls,
                                const std::optional<std::vector<Int>>& xi) {
    DecomposedPairing d;
    d.space_name = space.name();
    if (space.kind() == SpaceKind::linear) {
        // Linear models are evaluated in their proper polarization:
        // every weight strictly positive on xi.
        std::vector<Int> use;
        if (xi) {
            use = *xi;
            for (const auto& w : space.points()[0].weights)
                if (w.pair_int(use) <= 0)
                    throw input_error("linear space '" + space.name() +
                                      "': xi does not polarize weight " + w.str());
        } else {
            auto found = polarizable(space.points()[0].weights);
            if (!found)
                throw input_error("linear space '" + space.name() +
                                  "': weights not polarizable (moment map not proper)");
            use = *found;
        }
        d.pol = polarize(space, use);
    } else {
        d.pol = xi ? polarize(space, *xi) : choose_generic_xi(space);
    }
    for (const auto& p : space.points()) d.all_point_ids.push_back(p.id);
    for (const auto& term : pushforward_terms(space, cls, d.pol)) {
        d.term_ids.push_back(term.point_id);
        d.reprs.push_back(decompose(term, space.rank()));
    }
    return d;
}

PairingResult evaluate_pairing(const DecomposedPairing& d, const VecQ& t) {
    PairingResult r;
    r.t = t;
    r.xi = d.pol.xi;
    for (const auto& id : d.all_point_ids) r.per_point[id] = 0;
    Rat total = 0;
    for (size_t i = 0; i < d.reprs.size(); ++i) {
        EvalResult e = eval(d.reprs[i], t);
        if (!e.regular) {
            r.regular = false;
            if (r.wall_witness.empty())
                r.wall_witness = "point " + d.term_ids[i] + ": " + e.wall_witness;
            continue;
        }
        r.per_point[d.term_ids[i]] = e.value;
        total += e.value;
    }
    if (r.regular) r.value = total;
    return r;
}

PairingResult pair(const SpaceModel& space, const EquivariantClass& cls, const VecQ& t,
                   const std::optional<std::vector<Int>>& xi) {
    if (t.size() != space.rank()) throw input_error("pair: t has wrong rank");
    return evaluate_pairing(build_pairing(space, cls, xi), t);
}

namespace {

// A wall hyperplane <normal, t> = offset, with primitive integer
// normal whose first nonzero entry is positive.
struct Wall {
    std::vector<Int> normal;
    Rat offset;
    bool operator<(const Wall& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

std::vector<Int> primitive_normal(VecQ v) {
    Int lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<Int> n(v.size());
    for (size_t i = 0; i < v.size(); ++i) n[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    Int g = 0;
    for (const auto& x : n) g = boost::multiprecision::gcd(g, x);
    if (g != 0)
        for (auto& x : n) x /= g;
    for (const auto& x : n) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : n) y = -y;
        break;
    }
    return n;
}

// Faces of the atom cones: hyperplane through the apex spanned by all
// basis forms but one. These are exactly the loci where the piecewise
// polynomial can break.
std::set<Wall> collect_walls(const DecomposedPairing& d, size_t rank) {
    std::set<Wall> walls;
    for (const auto& repr : d.reprs)
        for (const auto& atom : repr.terms)
            for (size_t skip = 0; skip < rank; ++skip) {
                // Normal: orthogonal to every basis form except the
                // skipped one (forms viewed as vectors of t*).
                QMatrix rows;
                for (size_t j = 0; j < rank; ++j)
                    if (j != skip) rows.push_back(atom.basis[j].as_vecq());
                // Solve rows * x = 0 with a normalization row added.
                VecQ normal;
                if (rank == 1) {
                    normal = {Rat(1)};
                } else {
                    // Null space of a (k-1) x k rank-(k-1) matrix: fix
                    // one coordinate and solve; try each slot.
                    for (size_t fix = 0; fix < rank && normal.empty(); ++fix) {
                        QMatrix m = rows;
                        VecQ rhs(rank, Rat(0));
                        VecQ row(rank, Rat(0));
                        row[fix] = 1;
                        m.push_back(row);
                        rhs[rank - 1] = 1;
                        auto sol = mat_solve(m, rhs);
                        if (sol) normal = *sol;
                    }
                }
                if (normal.empty()) continue;
                Wall w;
                w.normal = primitive_normal(normal);
                Rat off = 0;
                for (size_t i = 0; i < rank; ++i) off += Rat(w.normal[i]) * atom.apex[i];
                w.offset = off;
                walls.insert(std::move(w));
            }
    return walls;
}

Rat wall_eval(const Wall& w, const VecQ& t) {
    Rat s = 0;
    for (size_t i = 0; i < t.size(); ++i) s += Rat(w.normal[i]) * t[i];
    return s - w.offset;
}

std::string wall_str(const Wall& w) {
    std::string s = "<[";
    for (size_t i = 0; i < w.normal.size(); ++i) {
        if (i) s += ",";
        s += w.normal[i].str();
    }
    return s + "], t> = " + rat_str(w.offset);
}

// All exponent vectors of total degree <= deg.
void enumerate_exps(size_t rank, int deg, size_t pos, MPoly::Exps& cur, int used,
                    std::vector<MPoly::Exps>& out) {
    if (pos == rank) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e + used <= deg; ++e) {
        cur[pos] = e;
        enumerate_exps(rank, deg, pos + 1, cur, used + e, out);
    }
    cur[pos] = 0;
}

std::vector<MPoly::Exps> monomials_up_to(size_t rank, int deg) {
    std::vector<MPoly::Exps> out;
    MPoly::Exps cur(rank, 0);
    enumerate_exps(rank, deg, 0, cur, 0, out);
    return out;
}

// Interpolation nodes: the principal lattice scaled by h, unisolvent
// for total degree deg in any dimension.
std::vector<VecQ> lattice_offsets(size_t rank, int deg) {
    std::vector<VecQ> out;
    for (const auto& e : monomials_up_to(rank, deg)) {
        VecQ v(rank);
        for (size_t i = 0; i < rank; ++i) v[i] = Rat(e[i]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

ChamberPolynomial dh_polynomial(const SpaceModel& space, const VecQ& t0) {
    size_t k = space.rank();
    if (t0.size() != k) throw input_error("dh_polynomial: t0 has wrong rank");
    EquivariantClass unit = class_unit(space);
    DecomposedPairing d = build_pairing(space, unit);

    PairingResult base = evaluate_pairing(d, t0);
    if (!base.regular)
        throw nonregular_error("dh_polynomial: t0 is not a regular value", base.wall_witness);

    int deg = (int)space.half_dim() - (int)k;
    if (deg < 0) deg = 0;

    auto offsets = lattice_offsets(k, deg);
    std::vector<VecQ> holdout;
    for (int j = 0; j < 3; ++j) {
        VecQ v(k);
        for (size_t i = 0; i < k; ++i) v[i] = Rat(1, 3 + (int)i + 2 * j) + (j == 2 ? Rat(deg) : Rat(0));
        holdout.push_back(std::move(v));
    }
    std::vector<VecQ> all_offsets = offsets;
    all_offsets.insert(all_offsets.end(), holdout.begin(), holdout.end());

    // Largest step keeping every node strictly inside the chamber of
    // t0, computed from the exact wall arrangement.
    auto walls = collect_walls(d, k);
    Rat h(1);
    for (const auto& w : walls) {
        Rat g = wall_eval(w, t0);
        if (g == 0)
            throw nonregular_error("dh_polynomial: t0 lies on a wall", wall_str(w));
        for (const auto& delta : all_offsets) {
            Rat dv = 0;
            for (size_t i = 0; i < k; ++i) dv += Rat(w.normal[i]) * delta[i];
            if (dv == 0 || rat_sign(dv) == rat_sign(g)) continue;
            Rat bound = -g / dv;  // positive
            if (h >= bound) h = bound / 2;
        }
    }

    auto monos = monomials_up_to(k, deg);
    size_t nm = monos.size();
    if (offsets.size() != nm) throw std::logic_error("dh_polynomial: node/monomial mismatch");

    QMatrix vand(nm, VecQ(nm));
    VecQ rhs(nm);
    for (size_t r = 0; r < nm; ++r) {
        VecQ node = t0;
        for (size_t i = 0; i < k; ++i) node[i] += h * offsets[r][i];
        PairingResult pr = evaluate_pairing(d, node);
        if (!pr.regular)
            throw nonregular_error("dh_polynomial: interpolation node on a wall",
                                   pr.wall_witness);
        rhs[r] = *pr.value;
        for (size_t c = 0; c < nm; ++c) {
            Rat m = 1;
            for (size_t i = 0; i < k; ++i)
                for (int e = 0; e < monos[c][i]; ++e) m *= node[i];
            vand[r][c] = m;
        }
    }
    auto coeffs = mat_solve(vand, rhs);
    if (!coeffs) throw std::logic_error("dh_polynomial: singular interpolation system");

    ChamberPolynomial cp;
    cp.base_point = t0;
    cp.degree_bound = deg;
    cp.poly = MPoly(k);
    for (size_t c = 0; c < nm; ++c) cp.poly.add_term(monos[c], (*coeffs)[c]);

    for (const auto& delta : holdout) {
        VecQ node = t0;
        for (size_t i = 0; i < k; ++i) node[i] += h * delta[i];
        PairingResult pr = evaluate_pairing(d, node);
        if (!pr.regular)
            throw nonregular_error("dh_polynomial: held-out node on a wall", pr.wall_witness);
        if (cp.poly.eval(node) != *pr.value)
            throw check_failure("dh_polynomial: held-out node disagrees with the fit "
                                "(chamber violation at " + vec_str(node) + ")");
    }
    return cp;
}

DerivativeReport dh_derivative_check(const SpaceModel& space, const VecQ& t0, size_t beta) {
    if (beta >= space.rank()) throw input_error("dh_derivative_check: bad direction index");
    ChamberPolynomial cp = dh_polynomial(space, t0);
    DerivativeReport rep;
    rep.poly_derivative = cp.poly.derivative(beta).eval(t0);
    EquivariantClass ub = class_uniform(space, MPoly::variable(space.rank(), beta));
    PairingResult pr = pair(space, ub, t0);
    if (!pr.regular) throw nonregular_error("dh_derivative_check: t0 not regular", pr.wall_witness);
    rep.u_class_pairing = *pr.value;
    rep.sigma = 1;
    rep.pass = rep.poly_derivative == rep.u_class_pairing * rep.sigma;
    return rep;
}

CobordismReport cobordism_check(const SpaceModel& space, const EquivariantClass& cls,
                                const VecQ& t, const std::optional<std::vector<Int>>& xi) {
    validate_class(space, cls);
    DecomposedPairing d = build_pairing(space, cls, xi);
    PairingResult compact = evaluate_pairing(d, t);
    if (!compact.regular)
        throw nonregular_error("cobordism_check: t not regular", compact.wall_witness);

    CobordismReport rep;
    rep.compact_value = *compact.value;
    rep.linear_total = 0;
    for (const auto& p : space.points()) {
        auto [flipped, nflips] = flip_form(p.weights, d.pol.xi);
        CobordismModel m;
        m.point_id = p.id;
        m.sign = (nflips % 2 == 0) ? 1 : -1;
        SpaceModel lin = builders::linear("T_" + p.id, space.rank(), flipped, p.moment);
        EquivariantClass lc = class_uniform(lin, cls.at(p.id));
        PairingResult lp = pair(lin, lc, t, d.pol.xi);
        if (!lp.regular)
            throw nonregular_error("cobordism_check: t not regular for the model at " + p.id,
                                   lp.wall_witness);
        m.value = *lp.value;
        m.obviously_empty = !cone_contains(flipped, vec_sub(t, p.moment));
        rep.linear_total += Rat(m.sign) * m.value;
        rep.models.push_back(std::move(m));
    }
    rep.pass = rep.linear_total == rep.compact_value;
    return rep;
}

PairingResult nonabelian_pair(const SpaceModel& space, const EquivariantClass& cls,
                              const std::vector<LinForm>& roots, int weyl_order, const VecQ& t) {
    if (weyl_order < 1) throw input_error("nonabelian_pair: Weyl group order must be positive");
    MPoly e = MPoly::constant(space.rank(), 1);
    for (const auto& alpha : roots) {
        if (alpha.is_zero()) throw input_error("nonabelian_pair: zero root");
        e = e * MPoly::from_linform(alpha);
    }
    PairingResult r = pair(space, class_mul(cls, class_uniform(space, e)), t);
    if (r.value) {
        *r.value /= weyl_order;
        for (auto& [id, v] : r.per_point) v /= weyl_order;
    }
    return r;
}

RegularityReport regularity_check(const SpaceModel& space, const VecQ& t) {
    DecomposedPairing d = build_pairing(space, class_unit(space));
    PairingResult pr = evaluate_pairing(d, t);
    RegularityReport rep;
    rep.regular = pr.regular;
    if (!pr.regular) {
        rep.witness = pr.wall_witness;
        return rep;
    }
    auto walls = collect_walls(d, space.rank());
    bool have = false;
    Rat best_d2;
    Wall best;
    for (const auto& w : walls) {
        Rat g = wall_eval(w, t);
        Rat n2 = 0;
        for (const auto& c : w.normal) n2 += Rat(c) * Rat(c);
        Rat d2 = g * g / n2;
        if (!have || d2 < best_d2) {
            have = true;
            best_d2 = d2;
            best = w;
        }
    }
    if (have)
        rep.nearest_wall = wall_str(best) + " (squared distance " + rat_str(best_d2) + ")";
    return rep;
}

}  // namespace redpair
