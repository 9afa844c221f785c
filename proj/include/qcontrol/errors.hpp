#pragma once

#include <stdexcept>
#include <string>

namespace qcontrol {

/// Thrown when a numerical rank decision lands in the ambiguous band
/// [tol/10, tol]: the candidate direction can neither be accepted as a new
/// basis element nor safely discarded. Callers must surface this instead of
/// guessing a verdict.
class IndeterminateError : public std::runtime_error {
public:
    IndeterminateError(double residual, int dim_reached)
        : std::runtime_error("indeterminate rank decision: relative residual " +
                             std::to_string(residual) + " inside the ambiguous band"),
          residual_(residual),
          dim_reached_(dim_reached) {}

    double residual() const { return residual_; }
    int dim_reached() const { return dim_reached_; }

private:
    double residual_;
    int dim_reached_;
};

/// Thrown when a requested computation exceeds the configured Hilbert-space
/// size cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(long long dim, long long cap)
        : std::runtime_error("total Hilbert dimension " + std::to_string(dim) +
                             " exceeds the cap of " + std::to_string(cap)),
          dim_(dim),
          cap_(cap) {}

    long long dim() const { return dim_; }
    long long cap() const { return cap_; }

private:
    long long dim_;
    long long cap_;
};

}  // namespace qcontrol
