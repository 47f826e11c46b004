#pragma once

#include <string>

#include "core/error.hpp"

namespace macias {

// Two-valued cardinality descriptor: an exhaustively listable finite count,
// or countably infinite.
class Cardinal {
 public:
  Cardinal() : Cardinal(true, 0) {}  // Finite(0); lets report structs default

  static Cardinal finite(long n) {
    if (n < 0) fail(Errc::InvalidArgument, "negative cardinal");
    return Cardinal(true, n);
  }
  static Cardinal countably_infinite() { return Cardinal(false, 0); }

  bool is_finite() const { return finite_; }
  long count() const {
    if (!finite_) fail(Errc::InfiniteSet, "cardinal is not finite");
    return n_;
  }

  std::string str() const {
    return finite_ ? "Finite(" + std::to_string(n_) + ")" : "CountablyInfinite";
  }

  friend bool operator==(const Cardinal& a, const Cardinal& b) = default;

 private:
  Cardinal(bool finite, long n) : finite_(finite), n_(n) {}
  bool finite_;
  long n_;
};

}  // namespace macias
