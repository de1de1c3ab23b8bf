#ifndef QCAV_ERRORS_HPP
#define QCAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcav {

// Two failure families: bad input/configuration (CLI exit code 2) and
// numerical validity problems discovered during computation (exit code 3).
enum class ErrorKind { config, numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct TruncationError : Error {
    explicit TruncationError(const std::string& m) : Error(ErrorKind::numeric, m) {}
};

struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct InvalidBogoliubov : Error {
    explicit InvalidBogoliubov(const std::string& m) : Error(ErrorKind::numeric, m) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& m) : Error(ErrorKind::numeric, m) {}
};

struct UnstableResonator : Error {
    explicit UnstableResonator(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct ZeroCoupling : Error {
    explicit ZeroCoupling(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct GateChargeNotTuned : Error {
    explicit GateChargeNotTuned(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct SqueezingUnstable : Error {
    explicit SqueezingUnstable(const std::string& m) : Error(ErrorKind::numeric, m) {}
};

struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& m) : Error(ErrorKind::numeric, m) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& m) : Error(ErrorKind::config, m) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error(ErrorKind::config, m) {}
};

}  // namespace qcav

#endif
