#pragma once

#include <stdexcept>

namespace mwroute {

/// Base type for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A file or JSON document does not match the expected schema.
struct ParseError : Error { using Error::Error; };
/// An invariant of the input data does not hold; the message names the
/// offending field and rule.
struct ValidationError : Error { using Error::Error; };
/// Total demand exceeds what the fleet can carry: no feasible plan exists.
struct InfeasibleError : Error { using Error::Error; };

/// Pairwise comparison matrix violates a_ji = 1/a_ij or has a bad diagonal.
struct NonReciprocalMatrix : Error { using Error::Error; };
/// Power iteration did not converge within its iteration budget.
struct ConvergenceFailure : Error { using Error::Error; };

struct DuplicateSite : Error { using Error::Error; };
struct UnknownSite : Error { using Error::Error; };
struct MissingEdge : Error { using Error::Error; };
struct ZeroSpeed : Error { using Error::Error; };
struct MissingRiskProfile : Error { using Error::Error; };
struct ZeroSegmentArea : Error { using Error::Error; };
struct NegativeDuration : Error { using Error::Error; };
struct InstanceTooLarge : Error { using Error::Error; };
struct SeedExhausted : Error { using Error::Error; };
struct DegenerateFitness : Error { using Error::Error; };

} // namespace mwroute
