#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// |lambda| != |mu|.
class WeightMismatch : public Error {
public:
    using Error::Error;
};

/// r <= 0 or {lambda, mu} inside {(2k), (k,k)}: covers with extra automorphisms.
class ExcludedConfiguration : public Error {
public:
    using Error::Error;
};

/// A configured search cap on degree or branch points was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Hypotheses of a bound or construction do not hold for the given input.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (partitions, sign strings).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hurwitz
