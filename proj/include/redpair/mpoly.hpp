#ifndef REDPAIR_MPOLY_HPP
#define REDPAIR_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "redpair/linform.hpp"
#include "redpair/numeric.hpp"

namespace redpair {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are keyed by exponent vectors of fixed length k; zero
/// coefficients are never stored, so equality is structural.
class MPoly {
  public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rat>;

    MPoly() : nvars_(0) {}
    explicit MPoly(size_t nvars) : nvars_(nvars) {}

    static MPoly constant(size_t nvars, const Rat& c);
    static MPoly monomial(size_t nvars, const Exps& e, const Rat& c);
    static MPoly variable(size_t nvars, size_t index);
    /// The degree-1 polynomial gamma(u).
    static MPoly from_linform(const LinForm& g);

    size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // 0 if zero polynomial
    int total_degree() const;    // -1 for the zero polynomial

    void add_term(const Exps& e, const Rat& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const Rat& c) const;
    MPoly pow(int n) const;
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    Rat eval(const VecQ& x) const;

    /// Substitutes each variable by a degree-1 polynomial in a fresh
    /// set of variables: u_i -> images[i].
    MPoly substitute(const std::vector<MPoly>& images) const;

    MPoly derivative(size_t var) const;

    std::string pretty(const std::string& var = "u") const;

  private:
    size_t nvars_;
    TermMap t_;
};

}  // namespace redpair

#endif
