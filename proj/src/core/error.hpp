#pragma once

#include <stdexcept>
#include <string>

namespace macias {

enum class Errc {
  Ok = 0,
  ZeroElement,
  UnsupportedForRing,
  SizeLimit,
  IndexBeyondFinitePrimes,
  NoPrimeOutside,
  NotHomeomorphicPrecondition,
  PreconditionHomeomorphic,
  ParseError,
  RingMismatch,
  InfiniteSet,
  InvalidArgument,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace macias
