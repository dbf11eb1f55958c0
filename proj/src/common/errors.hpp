#ifndef SEEDSTAB_COMMON_ERRORS_HPP
#define SEEDSTAB_COMMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seedstab {

// Error categories map 1:1 onto the CLI exit codes and the C API status
// values, so every throw site picks the code the operator will see.
enum class ErrorKind : int {
    config = 1,      // bad config / usage / template definitions
    data = 2,        // unreadable or malformed input data
    training = 3,    // training diverged or could not run
    evaluation = 4,  // missing models or incomplete eval coverage
    internal = 5,    // numeric faults and everything unexpected
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ErrorKind::config, msg) {}
};

struct DataError : Error {
    explicit DataError(const std::string& msg) : Error(ErrorKind::data, msg) {}
};

struct TrainingError : Error {
    TrainingError(const std::string& msg, int epoch, long step)
        : Error(ErrorKind::training,
                msg + " (epoch " + std::to_string(epoch) + ", step " + std::to_string(step) + ")"),
          epoch(epoch),
          step(step) {}
    int epoch;
    long step;
};

struct EvalError : Error {
    explicit EvalError(const std::string& msg) : Error(ErrorKind::evaluation, msg) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(ErrorKind::internal, msg) {}
};

}  // namespace seedstab

#endif
