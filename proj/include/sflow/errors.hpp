#pragma once

#include <stdexcept>
#include <string>

namespace sflow {

/// Base class for all toolkit errors. `code()` is a stable machine-readable
/// tag used by the CLI for stage-tagged failure reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct StepFailure : Error {
    explicit StepFailure(const std::string& w) : Error("StepFailure", w) {}
};
struct Blowup : Error {
    explicit Blowup(const std::string& w) : Error("Blowup", w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};
struct SingularBall : Error {
    explicit SingularBall(const std::string& w) : Error("SingularBall", w) {}
};
struct NearSingularity : Error {
    explicit NearSingularity(const std::string& w) : Error("NearSingularity", w) {}
};
struct DegenerateProjection : Error {
    explicit DegenerateProjection(const std::string& w) : Error("DegenerateProjection", w) {}
};
struct ZeroPush : Error {
    explicit ZeroPush(const std::string& w) : Error("ZeroPush", w) {}
};
struct IllConditioned : Error {
    explicit IllConditioned(const std::string& w) : Error("IllConditioned", w) {}
};
struct NoGap : Error {
    explicit NoGap(const std::string& w) : Error("NoGap", w) {}
};
struct AllStable : Error {
    explicit AllStable(const std::string& w) : Error("AllStable", w) {}
};
struct AllUnstable : Error {
    explicit AllUnstable(const std::string& w) : Error("AllUnstable", w) {}
};
struct NotHyperbolic : Error {
    explicit NotHyperbolic(const std::string& w) : Error("NotHyperbolic", w) {}
};
struct GapTooLarge : Error {
    explicit GapTooLarge(const std::string& w) : Error("GapTooLarge", w) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& w) : Error("NoConvergence", w) {}
};
struct Collapsed : Error {
    explicit Collapsed(const std::string& w) : Error("Collapsed", w) {}
};
struct OutOfBox : Error {
    explicit OutOfBox(const std::string& w) : Error("OutOfBox", w) {}
};
struct BoxTooSmall : Error {
    explicit BoxTooSmall(const std::string& w) : Error("BoxTooSmall", w) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error("ConfigError", w) {}
};
struct MissingCache : Error {
    explicit MissingCache(const std::string& w) : Error("MissingCache", w) {}
};
struct ChainError : Error {
    explicit ChainError(const std::string& w) : Error("ChainError", w) {}
};
struct IoError : Error {
    explicit IoError(const std::string& w) : Error("IoError", w) {}
};

} // namespace sflow
