#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dendrikit {

// Base of every library error. `code()` is the stable machine-readable
// name used by the CLI's error reporting.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

struct EmptyWordError : Error {
  explicit EmptyWordError(const std::string& what = "operation requires a nonempty word")
      : Error("EmptyWord", what) {}
};

struct NotPackedError : Error {
  explicit NotPackedError(const std::string& what = "word is not packed")
      : Error("NotPacked", what) {}
};

struct NotParkingError : Error {
  explicit NotParkingError(const std::string& what = "word is not a parking word")
      : Error("NotParking", what) {}
};

struct InvalidPartitionError : Error {
  explicit InvalidPartitionError(const std::string& what = "invalid ordered set partition")
      : Error("InvalidPartition", what) {}
};

struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& what = "requested degree exceeds the configured bound")
      : Error("ResourceLimit", what) {}
};

struct UnitOperandError : Error {
  explicit UnitOperandError(const std::string& what = "operand has a unit component")
      : Error("UnitOperand", what) {}
};

struct AlphabetMismatchError : Error {
  explicit AlphabetMismatchError(const std::string& what = "operands use different alphabet sizes")
      : Error("AlphabetMismatch", what) {}
};

struct LengthMismatchError : Error {
  explicit LengthMismatchError(const std::string& what = "operands have different lengths")
      : Error("LengthMismatch", what) {}
};

struct GroundSetMismatchError : Error {
  explicit GroundSetMismatchError(const std::string& what = "partitions have different ground sets")
      : Error("GroundSetMismatch", what) {}
};

struct InhomogeneousInputError : Error {
  explicit InhomogeneousInputError(const std::string& what = "input is not homogeneous")
      : Error("InhomogeneousInput", what) {}
};

struct NotSaturatedError : Error {
  explicit NotSaturatedError(const std::string& what = "polynomial is not constant on packing fibers")
      : Error("NotSaturated", what) {}
};

// Carries the byte offset of the first offending character.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("ParseError", what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace dendrikit
