#pragma once

#include <stdexcept>
#include <string>

namespace conewalls {

/// Base class for all errors raised by the library.  Each subclass carries a
/// stable short code used by the command line tool when reporting failures.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Gram matrix is not symmetric or does not have signature (1, n-1).
struct SignatureError : Error {
    explicit SignatureError(const std::string& msg) : Error("signature", msg) {}
};

/// Gram matrix is singular.
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& msg) : Error("degenerate", msg) {}
};

/// Reference vector h does not have positive square.
struct BadReferenceError : Error {
    explicit BadReferenceError(const std::string& msg) : Error("bad_reference", msg) {}
};

/// A form expected to be negative definite is not.
struct NotNegativeDefiniteError : Error {
    explicit NotNegativeDefiniteError(const std::string& msg)
        : Error("not_negative_definite", msg) {}
};

/// The zero vector was passed where a nonzero vector is required.
struct ZeroVectorError : Error {
    explicit ZeroVectorError(const std::string& msg) : Error("zero_vector", msg) {}
};

/// An operation precondition does not hold for the given arguments.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error("precondition", msg) {}
};

/// A nonidentity element fixing the Dirichlet base point was found.
struct StabilizerError : Error {
    explicit StabilizerError(const std::string& msg) : Error("stabilizer", msg) {}
};

/// A face pairing fails validation.
struct PairingError : Error {
    explicit PairingError(const std::string& msg) : Error("pairing", msg) {}
};

/// A point expected to lie in the subdivided cone does not.
struct NotInConeError : Error {
    explicit NotInConeError(const std::string& msg) : Error("not_in_cone", msg) {}
};

/// Malformed or inconsistent input data.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("validation", msg) {}
};

}  // namespace conewalls
