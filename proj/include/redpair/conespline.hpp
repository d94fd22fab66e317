#ifndef REDPAIR_CONESPLINE_HPP
#define REDPAIR_CONESPLINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redpair/localization.hpp"

namespace redpair {

/// Atom of the distribution J: coeff times the truncated-power density
///   t |-> coeff * prod_i s_i^{m_i-1}/(m_i-1)! / |det(basis)|
/// on {t : t - apex = sum s_i gamma_i, all s_i > 0}, zero elsewhere.
struct ConeSplineTerm {
    Rat coeff;
    VecQ apex;
    std::vector<LinForm> basis;  // k independent forms
    std::vector<int> mults;      // aligned with basis, all >= 1
};

/// Full decomposition of one local term. Pieces supported on walls or
/// at the apex vanish at regular values; they are counted, and kept in
/// the audit when requested.
struct SplineRepr {
    std::vector<ConeSplineTerm> terms;
    int discarded_lower_dim = 0;
    int discarded_point_supported = 0;
};

/// An exact rational-function summand coeff * num / prod den^mult,
/// recorded for the decomposition-exactness audit.
struct FracPiece {
    enum class Kind { atom, lower_dim, point };
    Kind kind;
    Rat coeff;
    MPoly num;  // polynomial in u
    std::map<LinForm, int> den;
};

/// Total order used on denominator forms; two orders give two valid
/// reduction sequences (results agree as distributions).
enum class FormOrder { lex, revlex };

/// Multivariate partial fractions. Rewrites sign * numerator /
/// prod(denominator) as a sum of simplicial cone atoms plus discarded
/// lower-dimensional and point-supported parts.
SplineRepr decompose(const LocalTerm& term, size_t rank, FormOrder order = FormOrder::lex,
                     std::vector<FracPiece>* audit = nullptr);

struct EvalResult {
    Rat value;           // meaningful only when regular
    bool regular = true;
    std::string wall_witness;  // set when a wall is hit
};

EvalResult eval(const std::vector<ConeSplineTerm>& terms, const VecQ& t);
EvalResult eval(const SplineRepr& repr, const VecQ& t);

/// Reconstructs coeff * num / prod den as checked data for the audit:
/// returns the piece sum and the original as polynomials after
/// clearing denominators, for exact comparison.
struct ClearedComparison {
    MPoly lhs;  // sum of pieces, cleared
    MPoly rhs;  // original term, cleared
};
ClearedComparison clear_and_compare(const LocalTerm& term, const std::vector<FracPiece>& pieces,
                                    size_t rank);

}  // namespace redpair

#endif
