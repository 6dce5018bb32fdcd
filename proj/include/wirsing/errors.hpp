#ifndef WIRSING_ERRORS_HPP
#define WIRSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wirsing {

//=============================================================================
// Error hierarchy.
//
// Every failure mode that callers are expected to distinguish gets its own
// type; everything derives from Error so the CLI can catch one base class
// and serialize {error, what} uniformly.
//=============================================================================

struct Error : std::runtime_error {
    explicit Error(const std::string& what_) : std::runtime_error(what_) {}
    virtual const char* kind() const { return "Error"; }
};

#define WIRSING_DEFINE_ERROR(NAME)                                            \
    struct NAME : Error {                                                     \
        explicit NAME(const std::string& what_) : Error(what_) {}             \
        const char* kind() const override { return #NAME; }                   \
    }

WIRSING_DEFINE_ERROR(ZeroInput);          // nonzero argument required
WIRSING_DEFINE_ERROR(OnSupport);          // point lies on the divisor / form
WIRSING_DEFINE_ERROR(EqualPoints);        // distinct points required
WIRSING_DEFINE_ERROR(NotPrime);           // place modulus must be prime
WIRSING_DEFINE_ERROR(PrecisionExhausted); // cap reached without certification
WIRSING_DEFINE_ERROR(UnsupportedRegime);  // parameters outside implemented range
WIRSING_DEFINE_ERROR(WrongDegree);        // point degree incompatible with query
WIRSING_DEFINE_ERROR(DegreeTooSmall);     // no witness map of the allowed degree
WIRSING_DEFINE_ERROR(BadIndex);           // index pair not disjoint / out of range
WIRSING_DEFINE_ERROR(NotSubgeneral);      // configuration fails position hypothesis
WIRSING_DEFINE_ERROR(CoincidentPlane);    // chosen points do not span a plane
WIRSING_DEFINE_ERROR(BadHypothesis);      // construction hypothesis failed to verify
WIRSING_DEFINE_ERROR(DegenerateUnit);     // pullback degenerates onto the divisor
WIRSING_DEFINE_ERROR(DegenerateMap);      // map degenerates (common factor, rank drop)
WIRSING_DEFINE_ERROR(UsageError);         // malformed input surface

#undef WIRSING_DEFINE_ERROR

} // namespace wirsing

#endif
