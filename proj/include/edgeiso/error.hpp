#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace edgeiso {

/// Raised for out-of-range sizes, malformed permutations, arity mismatches.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a textual or JSON input cannot be understood.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation refuses to run because the input is too large
/// for the requested strategy.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a precondition that must be machine-checked (validated
/// partitions, consistent schedules) does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Wall-clock budget shared by long-running searches. A default constructed
// budget never expires.
class Budget {
public:
    using clock = std::chrono::steady_clock;

    Budget() = default;

    static Budget unlimited() { return {}; }

    static Budget seconds(double s)
    {
        Budget b;
        if (s <= 0.0) {
            b.deadline_ = clock::now();
            b.zero_ = true;
        } else {
            b.deadline_ = clock::now() +
                          std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(s));
        }
        return b;
    }

    bool expired() const
    {
        if (zero_) return true;
        return deadline_ && clock::now() >= *deadline_;
    }

    // Cheap variant for tight loops: only looks at the clock every 4096 calls.
    bool expired_every(std::size_t& counter) const
    {
        if (zero_) return true;
        if (!deadline_) return false;
        if ((++counter & 0xFFF) != 0) return false;
        return clock::now() >= *deadline_;
    }

    bool bounded() const { return deadline_.has_value(); }

private:
    std::optional<clock::time_point> deadline_;
    bool zero_ = false;
};

} // namespace edgeiso
