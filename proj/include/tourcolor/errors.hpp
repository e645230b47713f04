#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tourcolor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    enum class Kind { MalformedHeader, LengthMismatch, NonBinaryCharacter, TrailingData };

    ParseError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// The instance is beyond the configured reach of an exact solver.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Extraction needs an exact minimum dominating set that is out of reach.
class ExactDominationInfeasible : public InfeasibleError {
public:
    using InfeasibleError::InfeasibleError;
};

class GammaTooSmall : public Error {
public:
    GammaTooSmall(std::size_t gamma, std::size_t required)
        : Error("domination number " + std::to_string(gamma) + " below required " + std::to_string(required)),
          gamma_(gamma), required_(required)
    {
    }
    std::size_t gamma() const { return gamma_; }
    std::size_t required() const { return required_; }

private:
    std::size_t gamma_;
    std::size_t required_;
};

/// A coloring names vertices outside the set it claims to color.
class ColoringOutOfScope : public Error {
public:
    using Error::Error;
};

class MalformedTrace : public Error {
public:
    using Error::Error;
};

class ConstantsTooLarge : public Error {
public:
    using Error::Error;
};

} // namespace tourcolor
