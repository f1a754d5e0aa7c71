#pragma once

#include <stdexcept>
#include <string>

namespace pmd {

// Base for all library errors. Specific types mirror the failure classes the CLI
// maps to exit codes: Error -> 1, Counterexample -> 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-side failures.
struct MalformedShape : Error { using Error::Error; };
struct CarrierNotSubset : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotAnInterval : Error { using Error::Error; };
struct PosetMismatch : Error { using Error::Error; };
struct NotAGrid : Error { using Error::Error; };
struct NotAChain : Error { using Error::Error; };
struct NotGridLike : Error { using Error::Error; };
struct NotEndomorphism : Error { using Error::Error; };
struct NotMono : Error { using Error::Error; };
struct NotMiddleExact : Error { using Error::Error; };
struct PathDoesNotCrossWindow : Error { using Error::Error; };
struct OverlapConditionViolated : Error { using Error::Error; };
struct InvalidCarrier : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// A theorem failed on valid input. Always an implementation bug, never bad data;
// the CLI reserves exit code 2 for these.
struct Counterexample : Error { using Error::Error; };
struct NonBlockSummand : Counterexample { using Counterexample::Counterexample; };
struct RouteDisagreement : Counterexample { using Counterexample::Counterexample; };
struct MissingRetraction : Counterexample { using Counterexample::Counterexample; };

} // namespace pmd
