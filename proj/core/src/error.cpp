#include "qeffects/error.hpp"

namespace qeffects {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NonHermitian: return "NonHermitian";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SpectrumOutOfRange: return "SpectrumOutOfRange";
        case ErrorKind::NotAState: return "NotAState";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::NotAProjection: return "NotAProjection";
        case ErrorKind::InvalidOrder: return "InvalidOrder";
        case ErrorKind::EmptyGrid: return "EmptyGrid";
        case ErrorKind::ClassifierInconsistency: return "ClassifierInconsistency";
        case ErrorKind::NumericalInconsistency: return "NumericalInconsistency";
        case ErrorKind::SumNotIdentity: return "SumNotIdentity";
        case ErrorKind::MemberNotEffect: return "MemberNotEffect";
        case ErrorKind::DuplicateOutcome: return "DuplicateOutcome";
        case ErrorKind::EmptyObservable: return "EmptyObservable";
        case ErrorKind::WeightsNotNormalized: return "WeightsNotNormalized";
        case ErrorKind::OutcomeSetMismatch: return "OutcomeSetMismatch";
        case ErrorKind::CommutingPair: return "CommutingPair";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, double value)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), value_(value) {}

}  // namespace qeffects
