#pragma once

#include <stdexcept>
#include <string>

namespace pvdb {

enum class ErrorKind {
  io,               // file system failure
  format,           // malformed exchange file, unknown format version, bad flags
  parse,            // query syntax error
  type,             // query type error
  invalid_node,     // node violates its structural invariants
  integrity,        // recomputed id or file digest mismatch
  closure,          // dangling reference
  conflict,         // same id bound to different node bodies
  append_only,      // visit history rewrite detected by merge
  timestamp_ahead,  // fingerprint timestamp newer than archive export
  hash_mismatch,    // dataset hash does not reproduce
  resource,         // evaluation budget exhausted
  null_comparison,  // relational comparison or arithmetic on null
  stale_list,       // origin list does not match the archive
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, std::string message) {
  throw Error(kind, std::move(message));
}

}  // namespace pvdb
