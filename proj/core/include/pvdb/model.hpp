#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pvdb/swhid.hpp"

namespace pvdb {

// Merkle-DAG node records. File bytes are never stored: a Content carries
// only its length and a digest of the (unstored) payload.

struct Content {
  std::int64_t length{};
  std::array<std::uint8_t, 32> payload_digest{};

  auto operator<=>(const Content&) const = default;
};

struct DirectoryEntry {
  std::string name;    // non-empty, no '/', not "." or ".."
  Swhid target;        // dir, cnt, or rev (submodule)
  std::int64_t perms{};

  auto operator<=>(const DirectoryEntry&) const = default;
};

struct Directory {
  std::vector<DirectoryEntry> entries;  // sorted bytewise by name, unique

  auto operator<=>(const Directory&) const = default;
};

struct Revision {
  Swhid tree;
  std::vector<Swhid> parents;  // ordered; acyclic across the archive
  std::string author;
  std::int64_t author_timestamp{};
  std::string committer;
  std::int64_t committer_timestamp{};
  std::string message;

  auto operator<=>(const Revision&) const = default;
};

struct Release {
  std::string name;
  Swhid target;  // rev, dir, cnt, or rel
  std::int64_t timestamp{};
  std::string message;

  auto operator<=>(const Release&) const = default;
};

struct SnapshotBranch {
  std::string name;  // e.g. refs/heads/main
  Swhid target;      // rev or rel

  auto operator<=>(const SnapshotBranch&) const = default;
};

struct Snapshot {
  std::vector<SnapshotBranch> branches;  // sorted bytewise by name, unique

  auto operator<=>(const Snapshot&) const = default;
};

using Node = std::variant<Content, Directory, Revision, Release, Snapshot>;

NodeType node_type(const Node& node);

struct OriginVisit {
  std::int64_t timestamp{};
  Swhid snapshot;

  auto operator<=>(const OriginVisit&) const = default;
};

struct Origin {
  std::string url;
  std::vector<OriginVisit> visits;  // strictly increasing timestamps

  auto operator<=>(const Origin&) const = default;
};

/// Extraction provenance carried by dataset graphs.
struct Provenance {
  std::int64_t source_export_timestamp{};
  std::int64_t fingerprint_timestamp{};
  std::string dataset_hash;

  auto operator<=>(const Provenance&) const = default;
};

/// One immutable export of the archive. A value type: construction and
/// merge produce new archives, nothing mutates in place, and a fully built
/// archive may be shared freely across threads.
struct ArchiveGraph {
  std::int64_t export_timestamp{};
  std::map<std::string, Origin> origins;  // keyed by url
  std::map<Swhid, Node> nodes;
  std::optional<Provenance> provenance;

  bool operator==(const ArchiveGraph&) const = default;

  const Node* find(const Swhid& id) const {
    auto it = nodes.find(id);
    return it == nodes.end() ? nullptr : &it->second;
  }
};

}  // namespace pvdb
