#ifndef REDPAIR_MODEL_HPP
#define REDPAIR_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "redpair/mpoly.hpp"

namespace redpair {

/// An isolated fixed point: its moment value and the isotropy weights
/// of the torus action on the tangent space (repeats allowed).
struct FixedPoint {
    std::string id;
    VecQ moment;
    std::vector<LinForm> weights;
};

enum class SpaceKind { compact, linear };

/// A Hamiltonian T-space reduced to its fixed-point data. Immutable
/// after validation; all engine formulas consume only this.
class SpaceModel {
  public:
    static SpaceModel validate(std::string name, SpaceKind kind, size_t rank,
                               std::vector<FixedPoint> points);

    const std::string& name() const { return name_; }
    SpaceKind kind() const { return kind_; }
    size_t rank() const { return rank_; }
    size_t half_dim() const { return half_dim_; }
    const std::vector<FixedPoint>& points() const { return points_; }
    const FixedPoint& point(const std::string& id) const;
    bool has_point(const std::string& id) const;

    /// All weights of all points, deduplicated.
    std::vector<LinForm> distinct_weights() const;

  private:
    SpaceModel() = default;
    std::string name_;
    SpaceKind kind_ = SpaceKind::compact;
    size_t rank_ = 0;
    size_t half_dim_ = 0;
    std::vector<FixedPoint> points_;
    std::map<std::string, size_t> index_;
};

/// Equivariant cohomology class stored by its polynomial restrictions
/// at the fixed points, keyed by point id.
struct EquivariantClass {
    std::string space;  // owning space name
    std::map<std::string, MPoly> restrictions;

    const MPoly& at(const std::string& id) const;
};

/// Checks that the class has exactly the space's point ids and the
/// right variable count.
void validate_class(const SpaceModel& space, const EquivariantClass& cls);

/// Fixed points of X x Y are pairs; moments add, weights concatenate.
SpaceModel product_space(const SpaceModel& x, const SpaceModel& y);

/// Restriction at (p,q) is the product of the factor restrictions.
EquivariantClass product_class(const SpaceModel& x, const SpaceModel& y,
                               const EquivariantClass& a, const EquivariantClass& b);

std::string product_id(const std::string& p, const std::string& q);

// Pointwise ring operations on classes over one space.
EquivariantClass class_unit(const SpaceModel& space);
EquivariantClass class_add(const EquivariantClass& a, const EquivariantClass& b);
EquivariantClass class_mul(const EquivariantClass& a, const EquivariantClass& b);
EquivariantClass class_scale(const EquivariantClass& a, const Rat& c);
EquivariantClass class_pow(const EquivariantClass& a, int n);
/// The class whose restriction is the same polynomial at every point.
EquivariantClass class_uniform(const SpaceModel& space, const MPoly& p);

/// The multiset of weights at F; the equivariant Euler class is their
/// product, kept factored.
const std::vector<LinForm>& euler_class(const FixedPoint& f);
MPoly euler_class_expanded(const FixedPoint& f, size_t rank);

namespace builders {

/// Two-point rank-1 model of the sphere: N at +1 with weight +1, S at
/// -1 with weight -1.
SpaceModel sphere();
EquivariantClass sphere_nu(const SpaceModel& s2);

/// Rank-2 three-point model of the projective plane with moment
/// triangle N(-1,2), S(-1,-1), E(2,-1).
SpaceModel cp2();
EquivariantClass cp2_nu(const SpaceModel& cp2);

/// n-fold product of spheres (left-associated).
SpaceModel sphere_power(int n);

/// Single-fixed-point linear model with the given weights.
SpaceModel linear(std::string name, size_t rank, std::vector<LinForm> weights,
                  VecQ moment_at_origin = {});

}  // namespace builders

}  // namespace redpair

#endif
