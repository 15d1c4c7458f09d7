// error.hpp -- error codes, the Error exception and the Result<T> outcome type

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace morph {

enum class ErrorCode {
    EmptyWord,
    NotInThetaImage,
    NotCommuting,
    EmptyX,
    EquationFails,
    PreconditionViolated,
    NotAntipalindrome,
    HypothesisNotMet,
    NoCommonRoot,
    NoNormalForm,
    InvalidMorphism,
    NotProlongable,
    NotAConjugacyWord,
    NotPrimitive,
    CyclicMorphism,
    BadBounds,
    UnstableLength,
    CertificationExceeded,
    ParseError,
    IOError,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotInThetaImage: return "NotInThetaImage";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::EmptyX: return "EmptyX";
    case ErrorCode::EquationFails: return "EquationFails";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAntipalindrome: return "NotAntipalindrome";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::NoCommonRoot: return "NoCommonRoot";
    case ErrorCode::NoNormalForm: return "NoNormalForm";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::NotProlongable: return "NotProlongable";
    case ErrorCode::NotAConjugacyWord: return "NotAConjugacyWord";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::CyclicMorphism: return "CyclicMorphism";
    case ErrorCode::BadBounds: return "BadBounds";
    case ErrorCode::UnstableLength: return "UnstableLength";
    case ErrorCode::CertificationExceeded: return "CertificationExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
    }
    return "Unknown";
}

/// Exception thrown for precondition violations and for unwrapping a failed Result.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    /// Parse errors carry the offending character offset.
    Error(ErrorCode code, const std::string& message, std::size_t position)
        : std::runtime_error(std::string(to_string(code)) + " at position " +
                             std::to_string(position) + ": " + message),
          code_(code), position_(position)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

private:
    ErrorCode code_;
    std::size_t position_ = 0;
};

struct Failure
{
    ErrorCode code;
    std::string message;
};

/// Either a value or a Failure. Used by the operations whose contract is "T or failure",
/// so that exhaustive checks can probe the failing side without paying for exceptions.
template <typename T>
class Result
{
public:
    Result(T value) : state_(std::move(value)) {}
    Result(Failure failure) : state_(std::move(failure)) {}

    bool ok() const noexcept { return std::holds_alternative<T>(state_); }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const&
    {
        if (!ok())
            throw Error(failure().code, failure().message);
        return std::get<T>(state_);
    }

    T&& value() &&
    {
        if (!ok())
            throw Error(failure().code, failure().message);
        return std::get<T>(std::move(state_));
    }

    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

    const Failure& failure() const { return std::get<Failure>(state_); }
    ErrorCode code() const { return failure().code; }

private:
    std::variant<T, Failure> state_;
};

inline Failure fail(ErrorCode code, std::string message = {})
{
    return Failure{code, std::move(message)};
}

} // namespace morph
