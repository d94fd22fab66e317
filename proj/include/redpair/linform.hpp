#ifndef REDPAIR_LINFORM_HPP
#define REDPAIR_LINFORM_HPP

#include <compare>
#include <string>
#include <vector>

#include "redpair/numeric.hpp"

namespace redpair {

/// An integral linear form on t, i.e. a lattice weight gamma with
/// coordinates in the basis dual to u_1..u_k.
class LinForm {
  public:
    LinForm() = default;
    explicit LinForm(std::vector<Int> coeffs) : c_(std::move(coeffs)) {}
    LinForm(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
    }

    size_t rank() const { return c_.size(); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& operator[](size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// <gamma, xi> for an integer vector xi in t.
    Int pair_int(const std::vector<Int>& xi) const {
        Int s = 0;
        for (size_t i = 0; i < c_.size(); ++i) s += c_[i] * xi[i];
        return s;
    }

    /// gamma evaluated at a rational point of t (or paired with t* by
    /// the standard inner product; both uses appear).
    Rat pair_rat(const VecQ& x) const {
        Rat s = 0;
        for (size_t i = 0; i < c_.size(); ++i) s += Rat(c_[i]) * x[i];
        return s;
    }

    LinForm negated() const {
        std::vector<Int> r(c_);
        for (auto& v : r) v = -v;
        return LinForm(std::move(r));
    }

    /// The form as a rational vector (its direction in t*).
    VecQ as_vecq() const {
        VecQ r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = Rat(c_[i]);
        return r;
    }

    friend bool operator==(const LinForm& a, const LinForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LinForm& a, const LinForm& b) { return a.c_ != b.c_; }
    // Lexicographic; gives the fixed total order used by the
    // partial-fraction rewrites and all canonical sorts.
    friend bool operator<(const LinForm& a, const LinForm& b) { return a.c_ < b.c_; }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + "]";
    }

    /// Rendering like "u2-u1" with the given variable stem.
    std::string pretty(const std::string& var = "u") const;

  private:
    std::vector<Int> c_;
};

}  // namespace redpair

#endif
