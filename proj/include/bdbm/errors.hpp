#pragma once

#include <stdexcept>
#include <string>

namespace bdbm {

enum class Errc {
    NonPositiveRate,
    CapTooSmall,
    TailDivergent,
    InfiniteScale,
    AtomBelowTruncation,
    InvalidChainParams,
    InvalidFellerParams,
    ZeroDenominator,
    SingularSystem,
    QuadratureNotConverged,
    TailNotConverged,
    DimensionMismatch,
    BandwidthTooSmall,
    RegimeMismatch,
    LevelMismatch,
    SnapFailure,
    ScheduleOrderViolation,
    InconsistentEstimates,
    TooFewSamples,
    ConfigError,
    IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bdbm
