#include "pvdb/archive.hpp"

#include <algorithm>

#include "pvdb/error.hpp"
#include "pvdb/manifest.hpp"

namespace pvdb {

namespace {

template <typename Fn>
void for_each_reference(const Node& node, Fn&& fn) {
  struct Visitor {
    Fn& fn;
    void operator()(const Content&) const {}
    void operator()(const Directory& d) const {
      for (const auto& e : d.entries) fn(e.target);
    }
    void operator()(const Revision& r) const {
      fn(r.tree);
      for (const auto& p : r.parents) fn(p);
    }
    void operator()(const Release& r) const { fn(r.target); }
    void operator()(const Snapshot& s) const {
      for (const auto& b : s.branches) fn(b.target);
    }
  };
  std::visit(Visitor{fn}, node);
}

}  // namespace

IntegrityReport verify_integrity(const ArchiveGraph& archive) {
  IntegrityReport report;
  for (const auto& [id, node] : archive.nodes) {
    try {
      const Swhid actual = compute_swhid(node);
      if (actual != id) {
        report.issues.push_back({id, MismatchKind::id_mismatch,
                                 "recomputed id " + actual.to_string()});
      }
    } catch (const Error& e) {
      report.issues.push_back({id, MismatchKind::invalid_node, e.what()});
    }
    for_each_reference(node, [&](const Swhid& ref) {
      if (!archive.find(ref)) {
        report.issues.push_back(
            {ref, MismatchKind::dangling_reference,
             "referenced by " + id.to_string()});
      }
    });
  }
  for (const auto& [url, origin] : archive.origins) {
    for (const auto& visit : origin.visits) {
      if (!archive.find(visit.snapshot)) {
        report.issues.push_back({visit.snapshot, MismatchKind::dangling_reference,
                                 "visit snapshot of origin " + url});
      }
    }
  }
  return report;
}

ArchiveGraph merge_append_only(const ArchiveGraph& base, const ArchiveGraph& delta) {
  ArchiveGraph out;
  out.export_timestamp = std::max(base.export_timestamp, delta.export_timestamp);
  out.nodes = base.nodes;
  for (const auto& [id, node] : delta.nodes) {
    auto [it, inserted] = out.nodes.emplace(id, node);
    if (!inserted && it->second != node) {
      raise(ErrorKind::conflict,
            "conflicting node records for " + id.to_string());
    }
  }
  out.origins = base.origins;
  for (const auto& [url, delta_origin] : delta.origins) {
    auto [it, inserted] = out.origins.emplace(url, delta_origin);
    if (inserted) continue;
    Origin& merged = it->second;
    // Union of the two visit sequences ordered by timestamp; a shared
    // timestamp must carry the same snapshot.
    std::vector<OriginVisit> visits = merged.visits;
    for (const auto& v : delta_origin.visits) {
      auto pos = std::lower_bound(
          visits.begin(), visits.end(), v.timestamp,
          [](const OriginVisit& lhs, std::int64_t t) { return lhs.timestamp < t; });
      if (pos != visits.end() && pos->timestamp == v.timestamp) {
        if (pos->snapshot != v.snapshot) {
          raise(ErrorKind::append_only,
                "origin " + url + ": visit at timestamp " +
                    std::to_string(v.timestamp) + " rewritten");
        }
        continue;
      }
      visits.insert(pos, v);
    }
    // Append-only: the base history must survive as a prefix.
    if (visits.size() < merged.visits.size() ||
        !std::equal(merged.visits.begin(), merged.visits.end(), visits.begin())) {
      raise(ErrorKind::append_only,
            "origin " + url + ": merged history does not extend the base history");
    }
    merged.visits = std::move(visits);
  }
  return out;
}

ArchiveView::ArchiveView(const ArchiveGraph& archive, std::int64_t cutoff)
    : archive_(&archive), cutoff_(cutoff) {
  for (const auto& [url, origin] : archive.origins) {
    auto end = std::upper_bound(
        origin.visits.begin(), origin.visits.end(), cutoff,
        [](std::int64_t t, const OriginVisit& v) { return t < v.timestamp; });
    const auto visible = static_cast<std::size_t>(end - origin.visits.begin());
    if (visible > 0) origins_.push_back({&origin, visible});
  }
  // archive.origins is keyed by url, so origins_ is already url-sorted.
}

const ArchiveView::OriginSlice* ArchiveView::find(std::string_view url) const {
  auto it = std::lower_bound(
      origins_.begin(), origins_.end(), url,
      [](const OriginSlice& s, std::string_view u) { return s.origin->url < u; });
  if (it == origins_.end() || it->origin->url != url) return nullptr;
  return &*it;
}

ArchiveView ArchiveView::restrict(std::int64_t t) const {
  return ArchiveView(*archive_, std::min(cutoff_, t));
}

}  // namespace pvdb
