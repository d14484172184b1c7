#pragma once

#include <stdexcept>
#include <string>

namespace superquant {

/// Exact rational arithmetic left the representable range.
class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An operation that consumes a parity was handed a non-homogeneous value.
class ParityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Density weights do not match the weights an operator or table expects.
class WeightMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument tuple length disagrees with the operator arity.
class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The weight delta lies in the resonant set {1/2, 1, 3/2, ..., k}: the
/// pivot coefficient at level `ell`, degree `p` vanishes and the symbol
/// table is not determined there.
class ResonantDelta : public std::runtime_error {
public:
    ResonantDelta(int ell, int p)
        : std::runtime_error("resonant delta: pivot vanishes at (ell, p) = ("
                             + std::to_string(ell) + ", " + std::to_string(p) + ")"),
          ell_(ell),
          p_(p) {}

    int level() const noexcept { return ell_; }
    int degree() const noexcept { return p_; }

private:
    int ell_;
    int p_;
};

} // namespace superquant
