#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pvdb/model.hpp"

namespace pvdb {

enum class MismatchKind {
  id_mismatch,         // stored id differs from recomputed manifest hash
  dangling_reference,  // referenced id not present in the node store
  invalid_node,        // node fails its own structural invariants
};

struct IntegrityIssue {
  Swhid id;
  MismatchKind kind{};
  std::string detail;
};

struct IntegrityReport {
  std::vector<IntegrityIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Recomputes every node id and checks reference closure (node references
/// and visit snapshots). Failures are report entries, never exceptions.
IntegrityReport verify_integrity(const ArchiveGraph& archive);

/// Union of two archives under the append-only contract: node records for a
/// shared id must be identical and base's visit sequence per origin must be
/// a prefix of the merged sequence. Export timestamp is the max of the two.
/// Throws Error(conflict) or Error(append_only).
ArchiveGraph merge_append_only(const ArchiveGraph& base, const ArchiveGraph& delta);

/// Read-only view of an archive with visits after the cutoff discarded.
/// Origins left with no visits are excluded from the universe. The
/// underlying archive is never modified and must outlive the view.
class ArchiveView {
 public:
  struct OriginSlice {
    const Origin* origin{};
    std::size_t visible_visits{};  // >= 1

    const OriginVisit& last_visit() const { return origin->visits[visible_visits - 1]; }
  };

  ArchiveView(const ArchiveGraph& archive, std::int64_t cutoff);

  const ArchiveGraph& archive() const { return *archive_; }
  std::int64_t cutoff() const { return cutoff_; }

  /// Universe of visible origins, sorted by url.
  const std::vector<OriginSlice>& origins() const { return origins_; }

  const OriginSlice* find(std::string_view url) const;

  /// Composes restrictions: the result cuts at min(cutoff(), t).
  ArchiveView restrict(std::int64_t t) const;

 private:
  const ArchiveGraph* archive_;
  std::int64_t cutoff_;
  std::vector<OriginSlice> origins_;
};

inline ArchiveView restrict_to_timestamp(const ArchiveGraph& archive, std::int64_t t) {
  return ArchiveView(archive, t);
}

}  // namespace pvdb
