#ifndef REDPAIR_ORACLE_HPP
#define REDPAIR_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "redpair/model.hpp"

namespace redpair {

struct OracleReport {
    Rat engine_value;
    Rat oracle_exact;      // triangulation and enumeration methods
    double oracle_float = 0.0;  // grid convolution
    std::string method;
    double tolerance = 0.0;
    bool pass = false;
};

/// Exact normalized volume of {s >= 0 : sum s_i gamma_i = t}: the
/// density of the iterated ray convolution at t. Vertex enumeration
/// plus recursive cone triangulation, entirely in rational arithmetic.
/// Throws on unbounded fibers (non-polarizable weights) and on
/// degenerate t (a vertex with too many tight hyperplanes).
Rat fiber_volume(const std::vector<LinForm>& weights, const VecQ& t);

/// Direct per-tuple sign-times-step evaluation for rank-one models
/// built from two-point spheres, restricted to classes whose
/// restrictions are monomials of degree half_dim - 1.
Rat fixed_point_enumeration(const SpaceModel& space, const EquivariantClass& cls, const Rat& t);

/// Closed-form value of the sphere-power pairing at 0 for the
/// monomial class with exponents ks (sum = n-1, n odd).
Rat sphere_power_closed_form(const std::vector<int>& ks);

/// Midpoint-rule check of (A*B)(t) against the engine's direct
/// product evaluation. Densities return nullopt on a wall sample.
using Density1D = std::function<std::optional<Rat>(const Rat&)>;
OracleReport grid_convolution_check(const Density1D& a, const Rat& a_lo, const Rat& a_hi,
                                    const Density1D& b, const Rat& t, const Rat& step,
                                    const Rat& engine_value, double tolerance);

}  // namespace redpair

#endif
