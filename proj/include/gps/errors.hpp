#pragma once

#include <stdexcept>
#include <string>

namespace gps {

// Malformed arguments: arity mismatches, values outside a module, bad ids.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ModuleMismatch : public InputError {
public:
    ModuleMismatch() : InputError("operands live in different modules") {}
};

class NotProperError : public InputError {
public:
    explicit NotProperError(const std::string& what) : InputError(what + ": submodule must be proper") {}
};

class UnsupportedMorphism : public InputError {
public:
    using InputError::InputError;
};

// Requests that need a finite point set but got an infinite module or ring.
class InfiniteModuleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class EnumerationBoundExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// An exact answer was required but every radical strategy came back Unknown.
class RadicalUnknownError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gps
