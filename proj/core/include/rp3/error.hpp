#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rp3 {

enum class Errc {
  MissingEdge,
  BadVertex,
  BadVertices,
  LoopEdge,
  DuplicateEdge,
  SizeExceeded,
  DimensionExceeded,
  NotACycle,
  ModelInvalid,
  NotK33,
  NotATriangle,
  NotDegree3,
  WouldCreateParallel,
  MarksNotIndependent,
  ParseError,
  ObstructionDataMissing,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures carry the 1-based location of the offending token.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rp3
