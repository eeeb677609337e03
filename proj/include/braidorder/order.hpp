// Shared ordering vocabulary and error types.
#pragma once

#include <stdexcept>
#include <string>

namespace braidorder {

// Verdict of a strict total order on group elements (and on monomials).
enum class Ordering { less, equal, greater };

// Verdict of comparing two truncated series at their common degree.
// equal_at_degree is inconclusive for untruncated equality; callers escalate.
enum class SeriesOrdering { less, equal_at_degree, greater };

inline Ordering flip(Ordering o) {
  switch (o) {
    case Ordering::less: return Ordering::greater;
    case Ordering::greater: return Ordering::less;
    default: return Ordering::equal;
  }
}

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "LT";
    case Ordering::greater: return "GT";
    default: return "EQ";
  }
}

// Escalation schedule for series-backed comparisons: expand at
// initial_degree, double until decisive or degree_cap is exceeded.
struct CompareParams {
  int initial_degree = 4;
  int degree_cap = 32;

  void validate() const {
    if (initial_degree < 1 || degree_cap < initial_degree)
      throw std::invalid_argument("CompareParams: need 1 <= d0 <= cap");
  }
};

// Thrown when two distinct elements still agree at the degree cap.
// A resource bound, not a mathematical verdict; callers report it.
class UndecidedAtCap : public std::runtime_error {
 public:
  explicit UndecidedAtCap(int cap)
      : std::runtime_error("comparison undecided at degree cap " +
                           std::to_string(cap)),
        cap_(cap) {}
  int cap() const { return cap_; }

 private:
  int cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace braidorder
