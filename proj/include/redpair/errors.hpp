#ifndef REDPAIR_ERRORS_HPP
#define REDPAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace redpair {

/// Malformed or inconsistent input data (bad model, bad class, bad flag).
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested at a non-regular value of the moment map.
/// Carries a printable wall witness.
class nonregular_error : public std::runtime_error {
  public:
    nonregular_error(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

  private:
    std::string witness_;
};

/// A property check (polarization, convolution, cobordism, derivative)
/// that did not hold.
class check_failure : public std::runtime_error {
  public:
    explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace redpair

#endif
