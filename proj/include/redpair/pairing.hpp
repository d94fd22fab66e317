#ifndef REDPAIR_PAIRING_HPP
#define REDPAIR_PAIRING_HPP

#include <optional>

#include "redpair/conespline.hpp"

namespace redpair {

/// Exact pairing value with per-fixed-point breakdown. `value` is
/// absent when t is not regular; `wall_witness` then names the wall.
struct PairingResult {
    std::optional<Rat> value;
    std::map<std::string, Rat> per_point;
    bool regular = true;
    VecQ t;
    std::vector<Int> xi;
    std::string wall_witness;
};

/// A space/class pair pushed forward and decomposed once, reusable
/// across evaluation points.
struct DecomposedPairing {
    std::string space_name;
    Polarization pol;
    std::vector<std::string> all_point_ids;
    std::vector<std::string> term_ids;   // ids with nonzero numerator
    std::vector<SplineRepr> reprs;       // aligned with term_ids
};

DecomposedPairing build_pairing(const SpaceModel& space, const EquivariantClass& cls,
                                const std::optional<std::vector<Int>>& xi = std::nullopt);

PairingResult evaluate_pairing(const DecomposedPairing& d, const VecQ& t);

/// pair(space, a, t): polarize, push forward, decompose, evaluate.
PairingResult pair(const SpaceModel& space, const EquivariantClass& cls, const VecQ& t,
                   const std::optional<std::vector<Int>>& xi = std::nullopt);

/// An integer xi with <gamma_i, xi> > 0 for all weights, or absent
/// (the moment map of the linear model is not proper).
std::optional<std::vector<Int>> polarizable(const std::vector<LinForm>& weights);

/// beta_j -> sgn<beta_j, xi> * beta_j. Throws on a zero pairing.
std::pair<std::vector<LinForm>, int> flip_form(const std::vector<LinForm>& weights,
                                               const std::vector<Int>& xi);

/// Duistermaat-Heckman polynomial on the chamber of t0, fitted by
/// exact interpolation and verified at held-out nodes.
struct ChamberPolynomial {
    VecQ base_point;
    MPoly poly;  // in t_1..t_k
    int degree_bound;
};

ChamberPolynomial dh_polynomial(const SpaceModel& space, const VecQ& t0);

/// Compares d/dt_beta of the volume polynomial against the pairing of
/// the degree-one class u_beta. The global sign sigma is +1, fixed by
/// the rank-one linear calibration case.
struct DerivativeReport {
    Rat poly_derivative;
    Rat u_class_pairing;
    int sigma = 1;
    bool pass = false;
};

DerivativeReport dh_derivative_check(const SpaceModel& space, const VecQ& t0, size_t beta);

/// Per-fixed-point linear model contributions whose signed sum must
/// reproduce the compact pairing.
struct CobordismModel {
    std::string point_id;
    int sign;
    Rat value;
    bool obviously_empty;
};
struct CobordismReport {
    std::vector<CobordismModel> models;
    Rat linear_total;
    Rat compact_value;
    bool pass = false;
};

CobordismReport cobordism_check(const SpaceModel& space, const EquivariantClass& cls,
                                const VecQ& t,
                                const std::optional<std::vector<Int>>& xi = std::nullopt);

/// (1/|W|) * pair(space, a * e_Delta, t) where e_Delta restricts to
/// the product of the root forms at every fixed point.
PairingResult nonabelian_pair(const SpaceModel& space, const EquivariantClass& cls,
                              const std::vector<LinForm>& roots, int weyl_order, const VecQ& t);

struct RegularityReport {
    bool regular = true;
    std::string witness;        // offending wall when non-regular
    std::string nearest_wall;   // closest wall hyperplane otherwise
};

RegularityReport regularity_check(const SpaceModel& space, const VecQ& t);

}  // namespace redpair

#endif
