#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace opinionkb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// -- schema / marshalling --------------------------------------------------

struct SchemaMismatchError : Error {
  using Error::Error;
};

/// An enum field held a literal outside its member set.
struct EnumError : Error {
  std::string field;
  std::string literal;
  EnumError(std::string field_, std::string literal_)
      : Error("invalid value \"" + literal_ + "\" for field \"" + field_ + "\""),
        field(std::move(field_)),
        literal(std::move(literal_)) {}
};

/// The value tree does not have the shape the data model requires
/// (missing required field, unknown key, wrong value type).
struct StructureError : Error {
  using Error::Error;
};

/// No object or array literal was found anywhere in the completion text.
struct PayloadMissingError : Error {
  std::string raw;
  explicit PayloadMissingError(std::string raw_)
      : Error("no object or array literal found in completion text"),
        raw(std::move(raw_)) {}
};

/// A literal was found but could not be parsed.
struct PayloadParseError : Error {
  size_t position;
  PayloadParseError(const std::string& what, size_t position_)
      : Error(what + " at offset " + std::to_string(position_)),
        position(position_) {}
};

/// Every repair attempt failed; carries each attempt's raw text.
struct MarshalFailureError : Error {
  std::vector<std::string> attempts;
  MarshalFailureError(const std::string& last_error, std::vector<std::string> attempts_)
      : Error("marshalling failed after " + std::to_string(attempts_.size()) +
              " attempt(s): " + last_error),
        attempts(std::move(attempts_)) {}
};

// -- llm client -------------------------------------------------------------

struct ClientError : Error {
  using Error::Error;
};

struct TransportError : ClientError {
  using ClientError::ClientError;
};

struct RequestError : ClientError {
  int status;
  RequestError(int status_, const std::string& body)
      : ClientError("request rejected with status " + std::to_string(status_) +
                    (body.empty() ? "" : ": " + body)),
        status(status_) {}
};

struct EmptyResponseError : ClientError {
  using ClientError::ClientError;
};

struct ReplayMissError : ClientError {
  std::string digest;
  explicit ReplayMissError(std::string digest_)
      : ClientError("no recorded exchange for request digest " + digest_),
        digest(std::move(digest_)) {}
};

// -- kb store ---------------------------------------------------------------

struct DuplicateEntryError : Error {
  using Error::Error;
};

struct EmptyStoreError : Error {
  using Error::Error;
};

// -- pipeline ---------------------------------------------------------------

struct OptimizerError : Error {
  using Error::Error;
};

}  // namespace opinionkb
