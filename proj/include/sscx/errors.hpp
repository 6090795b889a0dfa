#ifndef SSCX_ERRORS_HPP
#define SSCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sscx {

/// Raised when an operation is called outside its parameter band.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object contradicts a structural claim that the
/// construction relies on (an image leaving a subspace, two constructions of
/// the same subspace disagreeing, a dimension formula failing).
class RefutationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sscx

#endif
