#pragma once

#include <stdexcept>
#include <string>

namespace uqwb {

/// Base class for all diagnostics raised by the workbench.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad weight denominator, index out of range, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Evaluation of a rational function in tau at a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Operation not supported in the current coefficient mode.
class ModeUnsupported : public Error {
public:
    using Error::Error;
};

/// A module whose matrices violate the generalized-weight structure.
class ModuleInvalid : public Error {
public:
    using Error::Error;
};

/// A builder produced a module that fails its own verification.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// A structural search (filtration, idempotent, composition factor) gave up.
class SearchFailure : public Error {
public:
    using Error::Error;
};

}  // namespace uqwb
