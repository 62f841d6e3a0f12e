#pragma once

#include <stdexcept>
#include <string>

namespace yev {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonTriangularRelations : Error { using Error::Error; };
struct OddSymplecticDimension : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct UnknownSymbol : Error { using Error::Error; };
struct UnknownAlgebraSpec : Error { using Error::Error; };
struct NonCentralSquare : Error { using Error::Error; };
struct DuplicateSymbol : Error { using Error::Error; };
struct SlotCollision : Error { using Error::Error; };
struct SlotOutOfRange : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct LieViolation : Error { using Error::Error; };
struct W12Nonzero : Error { using Error::Error; };
struct NonCentralCasimir : Error { using Error::Error; };
struct DegreeCapExceeded : Error { using Error::Error; };

// Parse failure with a byte offset into the input.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

} // namespace yev
