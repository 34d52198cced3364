#pragma once

#include <stdexcept>
#include <string>

namespace fracsolve {

/// Argument outside the mathematical domain of an operation (poles, t <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative procedure (series, quadrature refinement, bisection bracket)
/// did not reach its target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure inside the time-stepping scheme. Carries the time level at which
/// the failure happened, or -1 when the level is not known.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int level = -1)
        : std::runtime_error(level >= 0 ? what + " (time level " + std::to_string(level) + ")" : what),
          level_(level) {}

    int level() const noexcept { return level_; }

private:
    int level_;
};

/// Bad configuration or expression text. `line` is 1-based, 0 when unknown.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0, std::string key = {})
        : std::runtime_error(format(what, line, key)), line_(line), key_(std::move(key)) {}

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    static std::string format(const std::string& what, int line, const std::string& key) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!key.empty()) out += "'" + key + "': ";
        return out + what;
    }

    int line_;
    std::string key_;
};

}  // namespace fracsolve
