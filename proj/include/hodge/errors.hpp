#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Malformed or out-of-domain request (unstable space, bad exponents, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No full-rank system was found below the configured degree ceiling.
class EscalationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A relation row contradicted the rows already accepted.
class InconsistentSystem : public std::logic_error {
public:
    InconsistentSystem(int degree, const std::string& what)
        : std::logic_error(what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

class RankDeficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or malformed cache file, failed writes.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension bookkeeping went wrong; always a bug in this library.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hodge
