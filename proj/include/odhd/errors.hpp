#pragma once

#include <stdexcept>
#include <string>

namespace odhd {

// Error taxonomy shared by the library and the CLI exit-code mapping.
//   ConfigError   -> bad run configuration / missing inputs / unpriced cost entries
//   ParseError    -> malformed dataset or JSON documents
//   CapacityError -> mat capacity or layout violations
//   DomainError   -> value outside an operation's mathematical domain
//   InvalidArgument -> contract violation on an operation argument
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

// Row placement/spare-row problems inside the mat; same CLI exit class as capacity.
struct LayoutError : CapacityError {
    using CapacityError::CapacityError;
};

struct DomainError : Error {
    using Error::Error;
};

struct InvalidArgument : DomainError {
    using DomainError::DomainError;
};

}  // namespace odhd
