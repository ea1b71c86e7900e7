#pragma once

#include <stdexcept>
#include <string>

namespace linarb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph-core
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct MissingEdge : Error { using Error::Error; };

// coloring-state
struct WouldExceedDegree : Error { using Error::Error; };
struct WouldCloseCycle : Error { using Error::Error; };
struct NotColored : Error { using Error::Error; };

// reduction engines
struct StaleConfiguration : Error { using Error::Error; };
struct ExtensionFailed : Error { using Error::Error; };
struct UnreachableCase : Error { using Error::Error; };
struct NoConfigurationFound : Error { using Error::Error; };
struct QueueExhausted : Error { using Error::Error; };

// verifier / generator
struct TooLarge : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };

// cli
struct ParseError : Error { using Error::Error; };
struct NonSimpleInput : ParseError { using ParseError::ParseError; };
struct EdgeSetMismatch : Error { using Error::Error; };

}  // namespace linarb
