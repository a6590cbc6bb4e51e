#pragma once

#include <stdexcept>

namespace qbrauer {

/// A size guard was exceeded; the computation was refused, not attempted.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two rational specialisations disagreed, or a point is known to be
/// non-generic.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qbrauer
