#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gf2collatz {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroInput : public Error {
public:
    ZeroInput() : Error("zero polynomial is not a valid input") {}
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class BadFloor : public Error {
public:
    using Error::Error;
};

class NegativeDegree : public Error {
public:
    using Error::Error;
};

class IncomparableWindows : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class DegreeTooLarge : public Error {
public:
    using Error::Error;
};

class LimitExceeded : public Error {
public:
    explicit LimitExceeded(std::uint64_t limit)
        : Error("step limit " + std::to_string(limit) + " exceeded"), limit_(limit) {}
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

class NotInDomain : public Error {
public:
    using Error::Error;
};

class EmptySeed : public Error {
public:
    using Error::Error;
};

class BudgetZero : public Error {
public:
    BudgetZero() : Error("search budget must be positive") {}
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class CheckpointCorrupt : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace gf2collatz
