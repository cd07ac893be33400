#pragma once

#include <string>

#include "pvdb/model.hpp"

namespace pvdb {

// Canonical manifest encoding. The manifest is the exact byte string fed to
// the hash, so it is fixed bit for bit:
//
//   manifest   := tag3 '\n' field ('\n' field)*
//   field      := name ':' decimal-byte-length ':' value-bytes
//   reference  := 40 lowercase hex chars + one type byte (c d r l s)
//
// List fields emit one field line per element in stored order; composite
// elements (directory entries, snapshot branches) concatenate their
// sub-field encodings into a single value. Field orders per node type:
//   cnt: length, payload
//   dir: entries(perms, target-type, target, name)
//   rev: tree, parents, author, author_ts, committer, committer_ts, message
//   rel: name, target-type, target, timestamp, message
//   snp: branches(target-type, target, name)

/// Serializes the node. Throws Error(invalid_node) when the node violates
/// its structural invariants (unsorted or duplicate entries are never
/// silently repaired).
std::string canonical_manifest(const Node& node);

/// Hash of the canonical manifest; a pure function of node content.
Swhid compute_swhid(const Node& node);

}  // namespace pvdb
