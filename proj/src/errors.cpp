#include "bdbm/errors.hpp"

namespace bdbm {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPositiveRate: return "NonPositiveRate";
        case Errc::CapTooSmall: return "CapTooSmall";
        case Errc::TailDivergent: return "TailDivergent";
        case Errc::InfiniteScale: return "InfiniteScale";
        case Errc::AtomBelowTruncation: return "AtomBelowTruncation";
        case Errc::InvalidChainParams: return "InvalidChainParams";
        case Errc::InvalidFellerParams: return "InvalidFellerParams";
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::SingularSystem: return "SingularSystem";
        case Errc::QuadratureNotConverged: return "QuadratureNotConverged";
        case Errc::TailNotConverged: return "TailNotConverged";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::BandwidthTooSmall: return "BandwidthTooSmall";
        case Errc::RegimeMismatch: return "RegimeMismatch";
        case Errc::LevelMismatch: return "LevelMismatch";
        case Errc::SnapFailure: return "SnapFailure";
        case Errc::ScheduleOrderViolation: return "ScheduleOrderViolation";
        case Errc::InconsistentEstimates: return "InconsistentEstimates";
        case Errc::TooFewSamples: return "TooFewSamples";
        case Errc::ConfigError: return "ConfigError";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace bdbm
