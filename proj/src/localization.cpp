#include "redpair/localization.hpp"

#include <algorithm>

#include "redpair/errors.hpp"

namespace redpair {

std::string Polarization::xi_str() const {
    std::string s = "(";
    for (size_t i = 0; i < xi.size(); ++i) {
        if (i) s += ",";
        s += xi[i].str();
    }
    return s + ")";
}

Polarization choose_generic_xi(const SpaceModel& space) {
    size_t k = space.rank();
    auto weights = space.distinct_weights();
    for (Int n = 1;; ++n) {
        std::vector<Int> xi(k);
        Int p = 1;
        for (size_t i = 0; i < k; ++i) {
            xi[i] = p;
            p *= n;
        }
        bool generic = true;
        for (const auto& w : weights)
            if (w.pair_int(xi) == 0) {
                generic = false;
                break;
            }
        if (generic) return polarize(space, xi);
    }
}

Polarization polarize(const SpaceModel& space, const std::vector<Int>& xi) {
    if (xi.size() != space.rank()) throw input_error("polarize: xi has wrong rank");
    Polarization pol;
    pol.xi = xi;
    for (const auto& p : space.points()) {
        std::vector<bool> flips;
        int eps = 1;
        for (const auto& w : p.weights) {
            Int v = w.pair_int(xi);
            if (v == 0)
                throw input_error("polarize: xi is not generic, <" + w.str() + ", xi> = 0 at '" +
                                  p.id + "'");
            bool flip = v < 0;
            flips.push_back(flip);
            if (flip) eps = -eps;
        }
        pol.flips[p.id] = std::move(flips);
        pol.eps[p.id] = eps;
    }
    return pol;
}

std::vector<LocalTerm> pushforward_terms(const SpaceModel& space, const EquivariantClass& cls,
                                         const Polarization& pol) {
    validate_class(space, cls);
    std::vector<LocalTerm> terms;
    for (const auto& p : space.points()) {
        const MPoly& num = cls.at(p.id);
        if (num.is_zero()) continue;  // zero numerators contribute nothing
        LocalTerm t;
        t.point_id = p.id;
        t.numerator = num;
        t.apex = p.moment;
        auto flip_it = pol.flips.find(p.id);
        if (flip_it == pol.flips.end())
            throw input_error("polarization does not cover point '" + p.id + "'");
        const auto& flips = flip_it->second;
        for (size_t j = 0; j < p.weights.size(); ++j)
            t.denominator.push_back(flips[j] ? p.weights[j].negated() : p.weights[j]);
        std::sort(t.denominator.begin(), t.denominator.end());
        t.sign = pol.eps.at(p.id);
        terms.push_back(std::move(t));
    }
    std::sort(terms.begin(), terms.end(),
              [](const LocalTerm& a, const LocalTerm& b) { return a.point_id < b.point_id; });
    return terms;
}

std::vector<LocalTerm> convolve(const std::vector<LocalTerm>& a, const std::vector<LocalTerm>& b) {
    std::vector<LocalTerm> out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            if (ta.apex.size() != tb.apex.size()) throw input_error("convolve: rank mismatch");
            LocalTerm t;
            t.point_id = product_id(ta.point_id, tb.point_id);
            t.numerator = ta.numerator * tb.numerator;
            if (t.numerator.is_zero()) continue;
            t.denominator = ta.denominator;
            t.denominator.insert(t.denominator.end(), tb.denominator.begin(),
                                 tb.denominator.end());
            std::sort(t.denominator.begin(), t.denominator.end());
            t.apex = vec_add(ta.apex, tb.apex);
            t.sign = ta.sign * tb.sign;
            out.push_back(std::move(t));
        }
    std::sort(out.begin(), out.end(),
              [](const LocalTerm& x, const LocalTerm& y) { return x.point_id < y.point_id; });
    return out;
}

}  // namespace redpair
