#pragma once

#include <stdexcept>
#include <string>

namespace torus4 {

enum class ErrorKind {
  Parse,         // malformed text or binary input
  Domain,        // input is well formed but outside the operation's domain
  Precondition,  // caller violated a documented precondition
  Invariant,     // an internal guarantee failed; always a bug or a bad input map
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace torus4
