#ifndef REDPAIR_LINALG_HPP
#define REDPAIR_LINALG_HPP

#include <optional>
#include <vector>

#include "redpair/linform.hpp"
#include "redpair/numeric.hpp"

namespace redpair {

using QMatrix = std::vector<std::vector<Rat>>;  // row major

Rat mat_det(const QMatrix& m);
std::optional<QMatrix> mat_inverse(const QMatrix& m);
std::optional<VecQ> mat_solve(const QMatrix& m, const VecQ& rhs);

/// Determinant of the square matrix whose rows are the given forms.
Rat det(const std::vector<LinForm>& forms);

/// Coordinates s with v = sum_i s_i * basis_i, or nullopt when the
/// forms are dependent.
std::optional<VecQ> solve_in_basis(const std::vector<LinForm>& basis, const VecQ& v);

/// Rank of the set of forms over Q.
size_t form_rank(const std::vector<LinForm>& forms);

/// Expresses target as a rational combination of the given forms if
/// possible: target = sum_i c_i * forms_i.
std::optional<VecQ> express_in_span(const std::vector<LinForm>& forms, const LinForm& target);

/// An integer vector xi with <gamma, xi> > 0 for every listed form,
/// found by exact Fourier-Motzkin elimination; nullopt when the open
/// cone is empty.
std::optional<std::vector<Int>> positive_functional(const std::vector<LinForm>& forms);

/// Whether t lies in the closed cone {sum s_i gamma_i : s_i >= 0}.
bool cone_contains(const std::vector<LinForm>& gens, const VecQ& t);

}  // namespace redpair

#endif
