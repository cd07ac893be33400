#include "pvdb/error.hpp"

namespace pvdb {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io: return "io";
    case ErrorKind::format: return "format";
    case ErrorKind::parse: return "parse";
    case ErrorKind::type: return "type";
    case ErrorKind::invalid_node: return "invalid-node";
    case ErrorKind::integrity: return "integrity";
    case ErrorKind::closure: return "closure";
    case ErrorKind::conflict: return "conflict";
    case ErrorKind::append_only: return "append-only";
    case ErrorKind::timestamp_ahead: return "timestamp-ahead";
    case ErrorKind::hash_mismatch: return "hash-mismatch";
    case ErrorKind::resource: return "resource";
    case ErrorKind::null_comparison: return "null-comparison";
    case ErrorKind::stale_list: return "stale-list";
  }
  return "unknown";
}

}  // namespace pvdb
