#pragma once

#include <stdexcept>
#include <string>

namespace steinitz {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define STEINITZ_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                              \
    public:                                                                  \
        using Error::Error;                                                  \
    }

STEINITZ_DEFINE_ERROR(NotSquarefree);
STEINITZ_DEFINE_ERROR(DivisionByZero);
STEINITZ_DEFINE_ERROR(ZeroIdeal);
STEINITZ_DEFINE_ERROR(NotFiniteIndex);
STEINITZ_DEFINE_ERROR(NotIntegral);
STEINITZ_DEFINE_ERROR(NotSubmodule);
STEINITZ_DEFINE_ERROR(InfiniteIndex);
STEINITZ_DEFINE_ERROR(NotSublattice);
STEINITZ_DEFINE_ERROR(ModeMismatch);
STEINITZ_DEFINE_ERROR(NotPrime);
STEINITZ_DEFINE_ERROR(FactorResidue);
STEINITZ_DEFINE_ERROR(RankDefect);
STEINITZ_DEFINE_ERROR(NotOnCurve);
STEINITZ_DEFINE_ERROR(NotOnTwist);
STEINITZ_DEFINE_ERROR(PoleEncountered);
STEINITZ_DEFINE_ERROR(ValidationFailed);
STEINITZ_DEFINE_ERROR(SearchExhausted);
STEINITZ_DEFINE_ERROR(ParseError);
STEINITZ_DEFINE_ERROR(InternalError);

#undef STEINITZ_DEFINE_ERROR

} // namespace steinitz
