#pragma once

#include <stdexcept>
#include <string>

namespace signet {

// Malformed input text or files (edge lists, JSON graphs, vectors).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation that cannot proceed for numerical/structural reasons
// (no zero eigenvalue, singular follower block, diverging integration).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace signet
