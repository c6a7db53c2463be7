#pragma once

#include <stdexcept>
#include <string>

namespace polygb {

// Every failure mode the library reports deliberately. CLI maps these to
// exit codes (Timeout -> 3, everything else -> 2).
enum class Errc {
  Empty,
  NotConnected,
  ParseError,
  UnknownPattern,
  BadIndex,
  VertexNotInP,
  OrderPreconditionViolated,
  Timeout,
  DimensionMismatch,
  NotThin,
  BadGridSpec,
  DeletionNotInP1,
  DoesNotClose,
  SelfOverlap,
  NotThinCycle,
  RankCapExceeded,
  BadConfig,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace polygb
