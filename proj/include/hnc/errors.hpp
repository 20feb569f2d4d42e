#ifndef HNC_ERRORS_HPP
#define HNC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hnc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division by a residue that shares a factor with the modulus.
struct NotInvertible : Error {
    using Error::Error;
};

// A rational whose denominator is divisible by p cannot be reduced mod p^e.
struct NotPIntegral : Error {
    using Error::Error;
};

// Arithmetic between residues living in different rings.
struct ModulusMismatch : Error {
    using Error::Error;
};

// Index argument outside the valid domain (negative, past p-2, overflowing, ...).
struct IndexOutOfRange : Error {
    using Error::Error;
};

// Index-position expression did not evaluate to an exact integer.
struct NonIntegerIndex : Error {
    using Error::Error;
};

// Variable used without an enclosing binder.
struct UnboundVariable : Error {
    using Error::Error;
};

// Modulus construction outside the supported p^e family.
struct InvalidModulus : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    std::string expected;

    ParseError(int line_, int column_, std::string expected_, const std::string& got)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": expected " + expected_ + ", got " + got),
          line(line_),
          column(column_),
          expected(std::move(expected_)) {}
};

}  // namespace hnc

#endif
