#pragma once

#include <stdexcept>
#include <string>

namespace mgn {

/// Precondition violated by caller-supplied arguments.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rewriting or pushforward rule table could not resolve a term.
class rule_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression exceeds the supported cohomological degree.
class degree_overflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw input_error(what);
}

}  // namespace mgn
