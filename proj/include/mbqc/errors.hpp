#pragma once

#include <stdexcept>
#include <string>

namespace mbqc {

enum class ErrorKind {
  NotComposable,
  InvalidPattern,
  InvalidCircuit,
  NotPathCover,
  UnequalIO,
  BadT,
  BadPartition,
  BadArgs,
  TooLarge,
  NotAFlow,
  InvalidInput,
  DirtyOutputs,
  BadCertificate,
  NonClifford,
  UnknownVertex,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace mbqc
