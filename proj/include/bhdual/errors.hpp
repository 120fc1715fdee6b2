#pragma once

#include <stdexcept>
#include <string>

namespace bhdual {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parser / input errors
struct SyntaxError : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct DuplicateMonomial : Error { using Error::Error; };

// group errors
struct GroupTooLarge : Error { using Error::Error; };
struct ElementNotInGroup : Error { using Error::Error; };
struct MismatchedMatrices : Error { using Error::Error; };
struct MismatchedOwners : Error { using Error::Error; };

// euler errors
struct NonIntegralResult : Error { using Error::Error; };
struct CriterionNotMet : Error { using Error::Error; };

// violated internal invariant, always a bug
struct InternalCheckFailure : Error { using Error::Error; };

} // namespace bhdual
