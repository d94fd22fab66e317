#include "redpair/conespline.hpp"

#include <algorithm>
#include <set>

#include "redpair/errors.hpp"
#include "redpair/linalg.hpp"

namespace redpair {

namespace {

// Denominator state during reduction: multiplicities over the fixed
// list of distinct forms. Coefficients of equal states are merged, so
// the worklist stays polynomial in the total multiplicity.
using MultKey = std::vector<int>;

struct ReductionContext {
    std::vector<LinForm> forms;  // distinct denominator forms, in reduction order
    size_t rank;
};

// Finds the first form (in order) of the support that is a rational
// combination of the earlier independent ones. Returns the index and
// the combination over the earlier support indices, or nullopt when
// the support is independent.
struct Dependency {
    size_t dependent;              // index into ctx.forms
    std::vector<std::pair<size_t, Rat>> combo;  // gamma_dep = sum c_i gamma_i
};

std::optional<Dependency> find_dependency(const ReductionContext& ctx, const MultKey& m) {
    std::vector<LinForm> indep;
    std::vector<size_t> indep_idx;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        std::vector<LinForm> trial = indep;
        trial.push_back(ctx.forms[i]);
        if (form_rank(trial) == trial.size()) {
            indep = std::move(trial);
            indep_idx.push_back(i);
            continue;
        }
        auto c = express_in_span(indep, ctx.forms[i]);
        if (!c) throw std::logic_error("partial fractions: dependency without relation");
        Dependency d;
        d.dependent = i;
        for (size_t j = 0; j < indep_idx.size(); ++j)
            if ((*c)[j] != 0) d.combo.emplace_back(indep_idx[j], (*c)[j]);
        return d;
    }
    return std::nullopt;
}

// Support completion: extend the independent support forms with
// standard coordinate forms to a full basis of t*.
std::vector<LinForm> complete_basis(const std::vector<LinForm>& support, size_t rank) {
    std::vector<LinForm> basis = support;
    for (size_t l = 0; l < rank && basis.size() < rank; ++l) {
        std::vector<Int> e(rank, Int(0));
        e[l] = 1;
        LinForm cand{std::move(e)};
        std::vector<LinForm> trial = basis;
        trial.push_back(cand);
        if (form_rank(trial) == trial.size()) basis.push_back(cand);
    }
    if (basis.size() != rank)
        throw std::logic_error("partial fractions: could not complete a basis");
    return basis;
}

struct AdaptedFrame {
    std::vector<LinForm> basis;  // support forms first, then completions
    size_t support_size;
    MPoly num_in_s;  // numerator rewritten in the adapted coordinates
};

}  // namespace

SplineRepr decompose(const LocalTerm& term, size_t rank, FormOrder order,
                     std::vector<FracPiece>* audit) {
    ReductionContext ctx;
    ctx.rank = rank;

    // Distinct forms in the chosen reduction order.
    std::set<LinForm> distinct(term.denominator.begin(), term.denominator.end());
    ctx.forms.assign(distinct.begin(), distinct.end());
    if (order == FormOrder::revlex) std::reverse(ctx.forms.begin(), ctx.forms.end());

    MultKey init(ctx.forms.size(), 0);
    for (const auto& f : term.denominator) {
        size_t i = std::find(ctx.forms.begin(), ctx.forms.end(), f) - ctx.forms.begin();
        init[i] += 1;
    }

    // Reduce dependent supports. Each rewrite moves one unit of
    // multiplicity from an earlier form onto a later one, so the
    // potential sum(m_i * i) strictly increases. Popping states in
    // potential order therefore processes each state exactly once,
    // and the state count is finite: the reduction terminates.
    auto potential = [](const MultKey& m) {
        long p = 0;
        for (size_t i = 0; i < m.size(); ++i) p += (long)m[i] * (long)i;
        return p;
    };
    std::map<std::pair<long, MultKey>, Rat> work;
    work[{potential(init), init}] = Rat(term.sign);
    std::map<MultKey, Rat> reduced;
    long last_potential = -1;
    while (!work.empty()) {
        auto it = work.begin();
        MultKey m = it->first.second;
        long pot = it->first.first;
        Rat coeff = it->second;
        work.erase(it);
        if (pot < last_potential)
            throw std::logic_error("partial fractions: potential not monotone");
        last_potential = pot;
        if (coeff == 0) continue;
        auto dep = find_dependency(ctx, m);
        if (!dep) {
            reduced[m] += coeff;
            continue;
        }
        for (const auto& [i, ci] : dep->combo) {
            MultKey next = m;
            next[i] -= 1;
            next[dep->dependent] += 1;
            long npot = potential(next);
            if (next[i] < 0 || npot <= pot)
                throw std::logic_error("partial fractions: rewrite does not terminate");
            work[{npot, next}] += coeff * ci;
        }
    }

    // Split each independent-support piece in adapted coordinates.
    SplineRepr repr;
    std::map<std::vector<size_t>, AdaptedFrame> frames;
    using AtomKey = std::pair<std::vector<LinForm>, std::vector<int>>;
    std::map<AtomKey, Rat> atoms;

    for (const auto& [m, coeff] : reduced) {
        if (coeff == 0) continue;
        std::vector<size_t> support;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) support.push_back(i);

        auto fit = frames.find(support);
        if (fit == frames.end()) {
            AdaptedFrame fr;
            std::vector<LinForm> supp_forms;
            for (size_t i : support) supp_forms.push_back(ctx.forms[i]);
            fr.basis = complete_basis(supp_forms, rank);
            fr.support_size = supp_forms.size();
            QMatrix b(rank, VecQ(rank));
            for (size_t i = 0; i < rank; ++i)
                for (size_t j = 0; j < rank; ++j) b[i][j] = Rat(fr.basis[i][j]);
            auto inv = mat_inverse(b);
            if (!inv) throw std::logic_error("partial fractions: singular adapted frame");
            std::vector<MPoly> images;
            for (size_t beta = 0; beta < rank; ++beta) {
                MPoly img(rank);
                for (size_t i = 0; i < rank; ++i) {
                    MPoly::Exps e(rank, 0);
                    e[i] = 1;
                    img.add_term(e, (*inv)[beta][i]);
                }
                images.push_back(std::move(img));
            }
            fr.num_in_s = term.numerator.substitute(images);
            fit = frames.emplace(support, std::move(fr)).first;
        }
        const AdaptedFrame& fr = fit->second;

        for (const auto& [exps, cm] : fr.num_in_s.terms()) {
            Rat piece_coeff = coeff * cm;
            std::vector<int> excess(rank);
            size_t neg_count = 0;
            for (size_t i = 0; i < rank; ++i) {
                int mult = (i < fr.support_size) ? m[support[i]] : 0;
                excess[i] = exps[i] - mult;
                if (excess[i] < 0) ++neg_count;
            }
            FracPiece::Kind kind;
            if (neg_count == rank) {
                kind = FracPiece::Kind::atom;
                std::vector<int> mults(rank);
                for (size_t i = 0; i < rank; ++i) mults[i] = -excess[i];
                atoms[{fr.basis, mults}] += piece_coeff;
            } else if (neg_count == 0) {
                kind = FracPiece::Kind::point;
                repr.discarded_point_supported += 1;
            } else {
                kind = FracPiece::Kind::lower_dim;
                repr.discarded_lower_dim += 1;
            }
            if (audit) {
                FracPiece p;
                p.kind = kind;
                p.coeff = piece_coeff;
                p.num = MPoly::constant(rank, 1);
                for (size_t i = 0; i < rank; ++i) {
                    if (excess[i] > 0) p.num = p.num * MPoly::from_linform(fr.basis[i]).pow(excess[i]);
                    if (excess[i] < 0) p.den[fr.basis[i]] += -excess[i];
                }
                audit->push_back(std::move(p));
            }
        }
    }

    for (auto& [key, c] : atoms) {
        if (c == 0) continue;
        ConeSplineTerm t;
        t.coeff = c;
        t.apex = term.apex;
        t.basis = key.first;
        t.mults = key.second;
        repr.terms.push_back(std::move(t));
    }
    return repr;
}

EvalResult eval(const std::vector<ConeSplineTerm>& terms, const VecQ& t) {
    EvalResult r;
    r.value = 0;
    for (const auto& atom : terms) {
        auto s = solve_in_basis(atom.basis, vec_sub(t, atom.apex));
        if (!s) throw std::logic_error("cone spline atom with a singular basis");
        bool inside = true;
        for (size_t i = 0; i < s->size(); ++i) {
            if ((*s)[i] == 0) {
                // t sits on the hyperplane through the apex spanned by
                // the other basis forms: a wall.
                r.regular = false;
                std::string w = "wall: apex " + vec_str(atom.apex) + ", facet normal to " +
                                atom.basis[i].str() + " direction";
                if (r.wall_witness.empty()) r.wall_witness = w;
                inside = false;
            } else if ((*s)[i] < 0) {
                inside = false;
            }
        }
        if (!inside) continue;
        Rat dens = atom.coeff;
        for (size_t i = 0; i < s->size(); ++i) {
            int m = atom.mults[i];
            for (int j = 0; j < m - 1; ++j) dens *= (*s)[i];
            if (m > 1) dens /= factorial(m - 1);
        }
        dens /= rat_abs(det(atom.basis));
        r.value += dens;
    }
    return r;
}

EvalResult eval(const SplineRepr& repr, const VecQ& t) { return eval(repr.terms, t); }

ClearedComparison clear_and_compare(const LocalTerm& term, const std::vector<FracPiece>& pieces,
                                    size_t rank) {
    // Common denominator: every form to its maximal multiplicity over
    // the original term and all pieces.
    std::map<LinForm, int> common;
    std::map<LinForm, int> orig;
    for (const auto& f : term.denominator) orig[f] += 1;
    for (const auto& [f, m] : orig) common[f] = std::max(common[f], m);
    for (const auto& p : pieces)
        for (const auto& [f, m] : p.den) common[f] = std::max(common[f], m);

    auto cofactor = [&](const std::map<LinForm, int>& den) {
        MPoly c = MPoly::constant(rank, 1);
        for (const auto& [f, m] : common) {
            auto it = den.find(f);
            int have = it == den.end() ? 0 : it->second;
            c = c * MPoly::from_linform(f).pow(m - have);
        }
        return c;
    };

    ClearedComparison cmp;
    cmp.lhs = MPoly(rank);
    for (const auto& p : pieces) cmp.lhs = cmp.lhs + p.num.scaled(p.coeff) * cofactor(p.den);
    cmp.rhs = term.numerator.scaled(Rat(term.sign)) * cofactor(orig);
    return cmp;
}

}  // namespace redpair
