#include "redpair/model.hpp"

#include <algorithm>
#include <set>

#include "redpair/errors.hpp"
#include "redpair/linalg.hpp"

namespace redpair {

SpaceModel SpaceModel::validate(std::string name, SpaceKind kind, size_t rank,
                                std::vector<FixedPoint> points) {
    SpaceModel m;
    m.name_ = std::move(name);
    m.kind_ = kind;
    m.rank_ = rank;
    if (points.empty()) throw input_error("space '" + m.name_ + "': no fixed points");
    m.half_dim_ = points.front().weights.size();
    for (const auto& p : points) {
        if (p.id.empty()) throw input_error("space '" + m.name_ + "': empty point id");
        if (p.moment.size() != rank)
            throw input_error("space '" + m.name_ + "' point '" + p.id +
                              "': moment has wrong rank");
        if (p.weights.size() != m.half_dim_)
            throw input_error("space '" + m.name_ + "' point '" + p.id +
                              "': inconsistent weight count");
        for (const auto& w : p.weights) {
            if (w.rank() != rank)
                throw input_error("space '" + m.name_ + "' point '" + p.id +
                                  "': weight has wrong rank");
            if (w.is_zero())
                throw input_error("space '" + m.name_ + "' point '" + p.id + "': zero weight");
        }
        if (m.index_.count(p.id))
            throw input_error("space '" + m.name_ + "': duplicate point id '" + p.id + "'");
        m.index_[p.id] = m.points_.size();
        m.points_.push_back(p);
    }
    if (kind == SpaceKind::linear) {
        if (m.points_.size() != 1)
            throw input_error("space '" + m.name_ + "': a linear space has exactly one fixed point");
        if (!positive_functional(m.points_[0].weights))
            throw input_error("space '" + m.name_ +
                              "': weights are not polarizable (moment map not proper)");
    }
    std::sort(m.points_.begin(), m.points_.end(),
              [](const FixedPoint& a, const FixedPoint& b) { return a.id < b.id; });
    m.index_.clear();
    for (size_t i = 0; i < m.points_.size(); ++i) m.index_[m.points_[i].id] = i;
    return m;
}

const FixedPoint& SpaceModel::point(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw input_error("space '" + name_ + "': no point '" + id + "'");
    return points_[it->second];
}

bool SpaceModel::has_point(const std::string& id) const { return index_.count(id) > 0; }

std::vector<LinForm> SpaceModel::distinct_weights() const {
    std::set<LinForm> s;
    for (const auto& p : points_)
        for (const auto& w : p.weights) s.insert(w);
    return {s.begin(), s.end()};
}

const MPoly& EquivariantClass::at(const std::string& id) const {
    auto it = restrictions.find(id);
    if (it == restrictions.end())
        throw input_error("class on '" + space + "': missing restriction at '" + id + "'");
    return it->second;
}

void validate_class(const SpaceModel& space, const EquivariantClass& cls) {
    if (cls.restrictions.size() != space.points().size())
        throw input_error("class on '" + space.name() + "': restriction count mismatch");
    for (const auto& p : space.points()) {
        const MPoly& r = cls.at(p.id);
        if (r.nvars() != space.rank())
            throw input_error("class on '" + space.name() + "': restriction at '" + p.id +
                              "' has wrong variable count");
    }
}

std::string product_id(const std::string& p, const std::string& q) {
    return "(" + p + "," + q + ")";
}

SpaceModel product_space(const SpaceModel& x, const SpaceModel& y) {
    if (x.rank() != y.rank())
        throw input_error("product: rank mismatch (" + x.name() + ", " + y.name() + ")");
    std::vector<FixedPoint> pts;
    for (const auto& p : x.points())
        for (const auto& q : y.points()) {
            FixedPoint f;
            f.id = product_id(p.id, q.id);
            f.moment = vec_add(p.moment, q.moment);
            f.weights = p.weights;
            f.weights.insert(f.weights.end(), q.weights.begin(), q.weights.end());
            pts.push_back(std::move(f));
        }
    SpaceKind kind = (x.kind() == SpaceKind::linear && y.kind() == SpaceKind::linear)
                         ? SpaceKind::linear
                         : SpaceKind::compact;
    return SpaceModel::validate(x.name() + "x" + y.name(), kind, x.rank(), std::move(pts));
}

EquivariantClass product_class(const SpaceModel& x, const SpaceModel& y,
                               const EquivariantClass& a, const EquivariantClass& b) {
    validate_class(x, a);
    validate_class(y, b);
    EquivariantClass r;
    r.space = x.name() + "x" + y.name();
    for (const auto& p : x.points())
        for (const auto& q : y.points())
            r.restrictions[product_id(p.id, q.id)] = a.at(p.id) * b.at(q.id);
    return r;
}

EquivariantClass class_unit(const SpaceModel& space) {
    return class_uniform(space, MPoly::constant(space.rank(), 1));
}

EquivariantClass class_uniform(const SpaceModel& space, const MPoly& p) {
    EquivariantClass r;
    r.space = space.name();
    for (const auto& f : space.points()) r.restrictions[f.id] = p;
    return r;
}

namespace {
void require_same_space(const EquivariantClass& a, const EquivariantClass& b) {
    if (a.space != b.space)
        throw input_error("class algebra: classes live on different spaces ('" + a.space +
                          "' vs '" + b.space + "')");
}
}  // namespace

EquivariantClass class_add(const EquivariantClass& a, const EquivariantClass& b) {
    require_same_space(a, b);
    EquivariantClass r;
    r.space = a.space;
    for (const auto& [id, p] : a.restrictions) r.restrictions[id] = p + b.at(id);
    return r;
}

EquivariantClass class_mul(const EquivariantClass& a, const EquivariantClass& b) {
    require_same_space(a, b);
    EquivariantClass r;
    r.space = a.space;
    for (const auto& [id, p] : a.restrictions) r.restrictions[id] = p * b.at(id);
    return r;
}

EquivariantClass class_scale(const EquivariantClass& a, const Rat& c) {
    EquivariantClass r;
    r.space = a.space;
    for (const auto& [id, p] : a.restrictions) r.restrictions[id] = p.scaled(c);
    return r;
}

EquivariantClass class_pow(const EquivariantClass& a, int n) {
    EquivariantClass r;
    r.space = a.space;
    for (const auto& [id, p] : a.restrictions) r.restrictions[id] = p.pow(n);
    return r;
}

const std::vector<LinForm>& euler_class(const FixedPoint& f) { return f.weights; }

MPoly euler_class_expanded(const FixedPoint& f, size_t rank) {
    MPoly e = MPoly::constant(rank, 1);
    for (const auto& w : f.weights) e = e * MPoly::from_linform(w);
    return e;
}

namespace builders {

SpaceModel sphere() {
    std::vector<FixedPoint> pts;
    pts.push_back({"N", {Rat(1)}, {LinForm{1}}});
    pts.push_back({"S", {Rat(-1)}, {LinForm{-1}}});
    return SpaceModel::validate("s2", SpaceKind::compact, 1, std::move(pts));
}

EquivariantClass sphere_nu(const SpaceModel& s2) {
    EquivariantClass nu;
    nu.space = s2.name();
    nu.restrictions["N"] = MPoly::variable(1, 0);
    nu.restrictions["S"] = -MPoly::variable(1, 0);
    return nu;
}

SpaceModel cp2() {
    // Weights point along the moment-triangle edges leaving each
    // vertex; their products give the Euler classes u1*u2 at S,
    // -u1*(u2-u1) at E and -u2*(u1-u2) at N.
    std::vector<FixedPoint> pts;
    pts.push_back({"N", {Rat(-1), Rat(2)}, {LinForm{0, -1}, LinForm{1, -1}}});
    pts.push_back({"S", {Rat(-1), Rat(-1)}, {LinForm{1, 0}, LinForm{0, 1}}});
    pts.push_back({"E", {Rat(2), Rat(-1)}, {LinForm{-1, 0}, LinForm{-1, 1}}});
    SpaceModel m = SpaceModel::validate("cp2", SpaceKind::compact, 2, std::move(pts));
    MPoly u1 = MPoly::variable(2, 0), u2 = MPoly::variable(2, 1);
    if (euler_class_expanded(m.point("S"), 2) != u1 * u2 ||
        euler_class_expanded(m.point("E"), 2) != -(u1 * (u2 - u1)) ||
        euler_class_expanded(m.point("N"), 2) != -(u2 * (u1 - u2)))
        throw std::logic_error("cp2 model: weights disagree with the pinned Euler classes");
    return m;
}

EquivariantClass cp2_nu(const SpaceModel& cp2) {
    EquivariantClass nu;
    nu.space = cp2.name();
    MPoly u1 = MPoly::variable(2, 0), u2 = MPoly::variable(2, 1);
    nu.restrictions["N"] = -u1 + u2.scaled(2);
    nu.restrictions["S"] = -u1 - u2;
    nu.restrictions["E"] = u1.scaled(2) - u2;
    return nu;
}

SpaceModel sphere_power(int n) {
    SpaceModel m = sphere();
    for (int i = 1; i < n; ++i) m = product_space(m, sphere());
    return m;
}

SpaceModel linear(std::string name, size_t rank, std::vector<LinForm> weights,
                  VecQ moment_at_origin) {
    if (moment_at_origin.empty()) moment_at_origin.assign(rank, Rat(0));
    FixedPoint origin{"0", std::move(moment_at_origin), std::move(weights)};
    return SpaceModel::validate(std::move(name), SpaceKind::linear, rank, {origin});
}

}  // namespace builders

}  // namespace redpair
