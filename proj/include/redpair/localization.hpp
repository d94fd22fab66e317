#ifndef REDPAIR_LOCALIZATION_HPP
#define REDPAIR_LOCALIZATION_HPP

#include <map>
#include <string>
#include <vector>

#include "redpair/model.hpp"

namespace redpair {

/// One fixed point's summand of the pushforward, after polarization:
/// sign * numerator / prod(denominator) attached at apex = mu(F).
/// Every denominator form pairs positively with the session xi.
struct LocalTerm {
    std::string point_id;
    MPoly numerator;
    std::vector<LinForm> denominator;
    VecQ apex;
    int sign = 1;  // epsilon^F = (-1)^{#flipped weights}
};

/// A choice of xi in t with <gamma, xi> != 0 for every weight, plus
/// the per-point flip bookkeeping it induces.
struct Polarization {
    std::vector<Int> xi;
    std::map<std::string, std::vector<bool>> flips;  // per weight, in point order
    std::map<std::string, int> eps;                  // product of flip signs

    std::string xi_str() const;
};

/// Deterministic search over xi = (1, N, N^2, ...) for N = 1, 2, ...
/// until all pairings are nonzero.
Polarization choose_generic_xi(const SpaceModel& space);

/// Polarizes with a caller-supplied xi; throws input_error naming the
/// offending weight when xi is not generic.
Polarization polarize(const SpaceModel& space, const std::vector<Int>& xi);

/// One LocalTerm per fixed point with nonzero restriction: numerator
/// = restriction, denominator = polarized weights, apex = mu(F),
/// sign = epsilon^F. Sorted by point id.
std::vector<LocalTerm> pushforward_terms(const SpaceModel& space, const EquivariantClass& cls,
                                         const Polarization& pol);

/// Pairwise products: numerators multiply, denominators concatenate,
/// apexes add, signs multiply. Both lists must share one xi.
std::vector<LocalTerm> convolve(const std::vector<LocalTerm>& a, const std::vector<LocalTerm>& b);

}  // namespace redpair

#endif
