#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qeffects {

enum class ErrorKind {
    NonSquare,
    NonFinite,
    NonHermitian,
    DimensionMismatch,
    SpectrumOutOfRange,
    NotAState,
    NotCommuting,
    NotAProjection,
    InvalidOrder,
    EmptyGrid,
    ClassifierInconsistency,
    NumericalInconsistency,
    SumNotIdentity,
    MemberNotEffect,
    DuplicateOutcome,
    EmptyObservable,
    WeightsNotNormalized,
    OutcomeSetMismatch,
    CommutingPair,
    InvalidConfig,
    Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `value()`
// carries the offending quantity (eigenvalue, residual norm, ...) when one
// exists and NaN otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what,
          double value = std::numeric_limits<double>::quiet_NaN());

    ErrorKind kind() const noexcept { return kind_; }
    double value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    double value_;
};

}  // namespace qeffects
