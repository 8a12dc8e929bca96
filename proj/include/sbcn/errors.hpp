#ifndef SBCN_ERRORS_HPP
#define SBCN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbcn {

/// Malformed input data (CSV/JSON). Carries a 1-based row and column when the
/// location is known, 0 otherwise.
class DataError : public std::runtime_error {
public:
    DataError(std::string message, int row = 0, int column = 0)
        : std::runtime_error(std::move(message)), row_(row), column_(column) {}

    int row() const { return row_; }
    int column() const { return column_; }

private:
    int row_;
    int column_;
};

/// Failure of a distributed batch (no workers, retry budget exhausted, ...).
class DistError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sbcn

#endif
