#pragma once

#include <stdexcept>
#include <string>

namespace stablekit {

// Common base so callers (and the CLI) can catch all library errors at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- numeric core ---
struct IntegrationFailure : Error { using Error::Error; };   // quadrature tolerance unmet
struct GridMismatch       : Error { using Error::Error; };   // grid does not span the required range

// --- empirical CF / fitting ---
struct EmptyData      : Error { using Error::Error; };
struct DegenerateCf   : Error { using Error::Error; };       // |phi_N| pinned at 0 or 1 on most of the grid
struct AlphaNearOne   : Error { using Error::Error; };       // tan(pi*alpha/2) diverges; use mean-based delta
struct InsufficientData : Error { using Error::Error; };

// --- tail models ---
struct InsufficientTail : Error { using Error::Error; };
struct NonPositiveValue : Error { using Error::Error; };
struct EmptyTail        : Error { using Error::Error; };
struct DegenerateTail   : Error { using Error::Error; };

// --- model comparison ---
struct NonFiniteDensity : Error { using Error::Error; };

// --- ingestion ---
struct ParseError     : Error { using Error::Error; };
struct SchemaError    : Error { using Error::Error; };
struct EmptyFile      : Error { using Error::Error; };
struct NoAlignedPairs : Error { using Error::Error; };

} // namespace stablekit
