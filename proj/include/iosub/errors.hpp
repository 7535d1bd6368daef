#ifndef IOSUB_ERRORS_HPP
#define IOSUB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iosub {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed regex or DSL text; `line`/`column` are 1-based.
struct SyntaxError : Error {
    std::size_t line;
    std::size_t column;
    SyntaxError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what + " (at " + std::to_string(line_) + ":" + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// A DSL expression refers to a name with no earlier binding.
struct UnknownNameError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct ArityMismatchError : Error {
    using Error::Error;
};

struct UnknownDimensionError : Error {
    using Error::Error;
};

/// A substitution's right-hand language contains epsilon where the
/// operation requires nonempty replacement words.
struct EpsilonUnsafeError : Error {
    std::string path;
    explicit EpsilonUnsafeError(const std::string& path_)
        : Error("epsilon-unsafe right operand at " + path_), path(path_) {}
};

/// A step leaf contains epsilon (deleting substitution).
struct DeletingStepError : Error {
    std::string path;
    explicit DeletingStepError(const std::string& path_)
        : Error("deleting step at " + path_), path(path_) {}
};

struct NotExistentiallyLinearError : Error {
    using Error::Error;
};

/// Internal assertion: a substituted dimension survived with a non-zero
/// coordinate. Indicates a bug, not an input error.
struct ResidualBinderDimensionError : Error {
    using Error::Error;
};

struct NotValidatedError : Error {
    using Error::Error;
};

}  // namespace iosub

#endif  // IOSUB_ERRORS_HPP
