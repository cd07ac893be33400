#include "pvdb/store.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pvdb/archive.hpp"
#include "pvdb/error.hpp"
#include "pvdb/hash.hpp"
#include "pvdb/hex.hpp"
#include "pvdb/manifest.hpp"
#include "pvdb/time_util.hpp"

namespace pvdb {

using json = nlohmann::json;

namespace {

[[noreturn]] void bad_record(std::string_view source, std::size_t line,
                             const std::string& what) {
  raise(ErrorKind::format,
        std::string(source) + ":" + std::to_string(line) + ": " + what);
}

int kind_rank(std::string_view kind) {
  if (kind == "content") return 1;
  if (kind == "directory") return 2;
  if (kind == "revision") return 3;
  if (kind == "release") return 4;
  if (kind == "snapshot") return 5;
  if (kind == "origin") return 6;
  if (kind == "visit") return 7;
  return 0;
}

// Strict field set: unknown or missing keys are hard errors, which keeps
// byte-level tampering detectable even in records that parse.
void expect_keys(const json& obj, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional,
                 std::string_view source, std::size_t line) {
  for (auto key : required) {
    if (!obj.contains(key)) {
      bad_record(source, line, "missing field '" + std::string(key) + "'");
    }
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& key = it.key();
    const bool known = std::any_of(required.begin(), required.end(),
                                   [&](std::string_view k) { return k == key; }) ||
                       std::any_of(optional.begin(), optional.end(),
                                   [&](std::string_view k) { return k == key; });
    if (!known) bad_record(source, line, "unknown field '" + key + "'");
  }
}

std::string get_string(const json& obj, std::string_view key, std::string_view source,
                       std::size_t line) {
  const auto& v = obj.at(std::string(key));
  if (!v.is_string()) {
    bad_record(source, line, "field '" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

std::int64_t get_int(const json& obj, std::string_view key, std::string_view source,
                     std::size_t line) {
  const auto& v = obj.at(std::string(key));
  if (!v.is_number_integer()) {
    bad_record(source, line, "field '" + std::string(key) + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::int64_t get_timestamp(const json& obj, std::string_view key,
                           std::string_view source, std::size_t line) {
  const std::string text = get_string(obj, key, source, line);
  try {
    return parse_rfc3339(text);
  } catch (const Error& e) {
    bad_record(source, line, std::string(key) + ": " + e.what());
  }
}

Swhid get_id(const json& obj, std::string_view key, NodeType type,
             std::string_view source, std::size_t line) {
  const std::string hex = get_string(obj, key, source, line);
  try {
    return Swhid::from_hex(type, hex);
  } catch (const Error& e) {
    bad_record(source, line, std::string(key) + ": " + e.what());
  }
}

Swhid get_target(const json& obj, std::string_view source, std::size_t line) {
  const std::string tag = get_string(obj, "target_type", source, line);
  const auto type = node_type_from_tag(tag);
  if (!type) bad_record(source, line, "unknown target_type '" + tag + "'");
  return get_id(obj, "target", *type, source, line);
}

json node_to_json(const Swhid& id, const Node& node) {
  json obj;
  obj["id"] = id.hex();
  struct Visitor {
    json& obj;
    void operator()(const Content& c) const {
      obj["kind"] = "content";
      obj["length"] = c.length;
      obj["payload_digest"] = to_hex(c.payload_digest.data(), c.payload_digest.size());
    }
    void operator()(const Directory& d) const {
      obj["kind"] = "directory";
      json entries = json::array();
      for (const auto& e : d.entries) {
        entries.push_back({{"name", e.name},
                           {"perms", e.perms},
                           {"target", e.target.hex()},
                           {"target_type", std::string(node_type_tag(e.target.type))}});
      }
      obj["entries"] = std::move(entries);
    }
    void operator()(const Revision& r) const {
      obj["kind"] = "revision";
      obj["tree"] = r.tree.hex();
      json parents = json::array();
      for (const auto& p : r.parents) parents.push_back(p.hex());
      obj["parents"] = std::move(parents);
      obj["author"] = r.author;
      obj["author_timestamp"] = format_rfc3339(r.author_timestamp);
      obj["committer"] = r.committer;
      obj["committer_timestamp"] = format_rfc3339(r.committer_timestamp);
      obj["message"] = r.message;
    }
    void operator()(const Release& r) const {
      obj["kind"] = "release";
      obj["name"] = r.name;
      obj["target"] = r.target.hex();
      obj["target_type"] = std::string(node_type_tag(r.target.type));
      obj["timestamp"] = format_rfc3339(r.timestamp);
      obj["message"] = r.message;
    }
    void operator()(const Snapshot& s) const {
      obj["kind"] = "snapshot";
      json branches = json::array();
      for (const auto& b : s.branches) {
        branches.push_back({{"name", b.name},
                            {"target", b.target.hex()},
                            {"target_type", std::string(node_type_tag(b.target.type))}});
      }
      obj["branches"] = std::move(branches);
    }
  };
  std::visit(Visitor{obj}, node);
  return obj;
}

Node node_from_json(const json& obj, std::string_view kind, std::string_view source,
                    std::size_t line) {
  if (kind == "content") {
    expect_keys(obj, {"kind", "id", "length", "payload_digest"}, {}, source, line);
    Content c;
    c.length = get_int(obj, "length", source, line);
    const std::string hex = get_string(obj, "payload_digest", source, line);
    if (!from_hex(hex, c.payload_digest.data(), c.payload_digest.size())) {
      bad_record(source, line, "payload_digest must be 64 hex chars");
    }
    return c;
  }
  if (kind == "directory") {
    expect_keys(obj, {"kind", "id", "entries"}, {}, source, line);
    Directory d;
    if (!obj.at("entries").is_array()) bad_record(source, line, "entries must be an array");
    for (const auto& item : obj.at("entries")) {
      expect_keys(item, {"name", "perms", "target", "target_type"}, {}, source, line);
      DirectoryEntry e;
      e.name = get_string(item, "name", source, line);
      e.perms = get_int(item, "perms", source, line);
      e.target = get_target(item, source, line);
      d.entries.push_back(std::move(e));
    }
    return d;
  }
  if (kind == "revision") {
    expect_keys(obj,
                {"kind", "id", "tree", "parents", "author", "author_timestamp",
                 "committer", "committer_timestamp", "message"},
                {}, source, line);
    Revision r;
    r.tree = get_id(obj, "tree", NodeType::directory, source, line);
    if (!obj.at("parents").is_array()) bad_record(source, line, "parents must be an array");
    for (const auto& p : obj.at("parents")) {
      if (!p.is_string()) bad_record(source, line, "parent ids must be strings");
      try {
        r.parents.push_back(Swhid::from_hex(NodeType::revision, p.get<std::string>()));
      } catch (const Error& e) {
        bad_record(source, line, e.what());
      }
    }
    r.author = get_string(obj, "author", source, line);
    r.author_timestamp = get_timestamp(obj, "author_timestamp", source, line);
    r.committer = get_string(obj, "committer", source, line);
    r.committer_timestamp = get_timestamp(obj, "committer_timestamp", source, line);
    r.message = get_string(obj, "message", source, line);
    return r;
  }
  if (kind == "release") {
    expect_keys(obj, {"kind", "id", "name", "target", "target_type", "timestamp", "message"},
                {}, source, line);
    Release r;
    r.name = get_string(obj, "name", source, line);
    r.target = get_target(obj, source, line);
    r.timestamp = get_timestamp(obj, "timestamp", source, line);
    r.message = get_string(obj, "message", source, line);
    return r;
  }
  // snapshot
  expect_keys(obj, {"kind", "id", "branches"}, {}, source, line);
  Snapshot s;
  if (!obj.at("branches").is_array()) bad_record(source, line, "branches must be an array");
  for (const auto& item : obj.at("branches")) {
    expect_keys(item, {"name", "target", "target_type"}, {}, source, line);
    SnapshotBranch b;
    b.name = get_string(item, "name", source, line);
    b.target = get_target(item, source, line);
    s.branches.push_back(std::move(b));
  }
  return s;
}

NodeType node_type_of_kind(std::string_view kind) {
  if (kind == "content") return NodeType::content;
  if (kind == "directory") return NodeType::directory;
  if (kind == "revision") return NodeType::revision;
  if (kind == "release") return NodeType::release;
  return NodeType::snapshot;
}

json meta_to_json(const ArchiveGraph& archive) {
  json meta;
  meta["kind"] = "meta";
  meta["format_version"] = kExchangeFormatVersion;
  meta["export_timestamp"] = format_rfc3339(archive.export_timestamp);
  if (archive.provenance) {
    meta["provenance"] = {
        {"dataset_hash", archive.provenance->dataset_hash},
        {"fingerprint_timestamp", format_rfc3339(archive.provenance->fingerprint_timestamp)},
        {"source_export_timestamp",
         format_rfc3339(archive.provenance->source_export_timestamp)}};
  }
  return meta;
}

void throw_on_integrity_issues(const ArchiveGraph& archive, std::string_view source) {
  const IntegrityReport report = verify_integrity(archive);
  if (report.ok()) return;
  const IntegrityIssue& first = report.issues.front();
  std::string msg = std::string(source) + ": " + first.id.to_string() + ": " +
                    first.detail;
  if (report.issues.size() > 1) {
    msg += " (and " + std::to_string(report.issues.size() - 1) + " more)";
  }
  switch (first.kind) {
    case MismatchKind::dangling_reference: raise(ErrorKind::closure, msg);
    case MismatchKind::id_mismatch:
    case MismatchKind::invalid_node: raise(ErrorKind::integrity, msg);
  }
  raise(ErrorKind::integrity, msg);
}

}  // namespace

ArchiveGraph archive_from_jsonl(std::string_view text, std::string_view source_name) {
  const std::size_t first_newline = text.find('\n');
  if (text.empty() || first_newline == std::string_view::npos) {
    raise(ErrorKind::format, std::string(source_name) + ": missing meta record");
  }

  json meta;
  try {
    meta = json::parse(text.substr(0, first_newline));
  } catch (const json::exception& e) {
    bad_record(source_name, 1, std::string("bad JSON: ") + e.what());
  }
  if (!meta.is_object() || !meta.contains("kind") || meta.at("kind") != "meta") {
    bad_record(source_name, 1, "first record must have kind 'meta'");
  }
  expect_keys(meta, {"kind", "format_version", "export_timestamp"},
              {"file_digest", "provenance"}, source_name, 1);
  if (get_int(meta, "format_version", source_name, 1) != kExchangeFormatVersion) {
    bad_record(source_name, 1,
               "unsupported format_version " + meta.at("format_version").dump());
  }

  const std::string_view body = text.substr(first_newline + 1);
  if (meta.contains("file_digest")) {
    const std::string stored = get_string(meta, "file_digest", source_name, 1);
    json stripped = meta;
    stripped.erase("file_digest");
    const std::string recomputed = sha256_hex(stripped.dump() + "\n" + std::string(body));
    if (recomputed != stored) {
      raise(ErrorKind::integrity,
            std::string(source_name) + ": file digest mismatch: stored " + stored +
                ", recomputed " + recomputed);
    }
  }

  ArchiveGraph archive;
  archive.export_timestamp = get_timestamp(meta, "export_timestamp", source_name, 1);
  if (meta.contains("provenance")) {
    const json& p = meta.at("provenance");
    expect_keys(p, {"dataset_hash", "fingerprint_timestamp", "source_export_timestamp"},
                {}, source_name, 1);
    Provenance prov;
    prov.dataset_hash = get_string(p, "dataset_hash", source_name, 1);
    prov.fingerprint_timestamp = get_timestamp(p, "fingerprint_timestamp", source_name, 1);
    prov.source_export_timestamp =
        get_timestamp(p, "source_export_timestamp", source_name, 1);
    archive.provenance = std::move(prov);
  }

  struct PendingVisit {
    std::string origin_url;
    OriginVisit visit;
    std::size_t line;
  };
  std::vector<PendingVisit> pending_visits;

  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos < body.size()) {
    ++line_no;
    std::size_t end = body.find('\n', pos);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view line = body.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) bad_record(source_name, line_no, "empty line");

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      bad_record(source_name, line_no, std::string("bad JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("kind") || !obj.at("kind").is_string()) {
      bad_record(source_name, line_no, "record without string 'kind'");
    }
    const std::string kind = obj.at("kind").get<std::string>();
    if (kind == "meta") bad_record(source_name, line_no, "duplicate meta record");

    if (kind == "origin") {
      expect_keys(obj, {"kind", "url"}, {}, source_name, line_no);
      const std::string url = get_string(obj, "url", source_name, line_no);
      if (url.empty()) bad_record(source_name, line_no, "empty origin url");
      if (!archive.origins.emplace(url, Origin{url, {}}).second) {
        bad_record(source_name, line_no, "duplicate origin record for " + url);
      }
    } else if (kind == "visit") {
      expect_keys(obj, {"kind", "origin", "snapshot", "timestamp"}, {}, source_name,
                  line_no);
      PendingVisit pv;
      pv.origin_url = get_string(obj, "origin", source_name, line_no);
      pv.visit.timestamp = get_timestamp(obj, "timestamp", source_name, line_no);
      pv.visit.snapshot = get_id(obj, "snapshot", NodeType::snapshot, source_name, line_no);
      pv.line = line_no;
      pending_visits.push_back(std::move(pv));
    } else if (kind_rank(kind) >= 1 && kind_rank(kind) <= 5) {
      const Swhid id = get_id(obj, "id", node_type_of_kind(kind), source_name, line_no);
      Node node = node_from_json(obj, kind, source_name, line_no);
      auto it = archive.nodes.find(id);
      if (it == archive.nodes.end()) {
        archive.nodes.emplace(id, std::move(node));
      } else if (!(it->second == node)) {
        raise(ErrorKind::conflict, std::string(source_name) + ":" +
                                       std::to_string(line_no) +
                                       ": conflicting records for " + id.to_string());
      }
    } else {
      bad_record(source_name, line_no, "unknown record kind '" + kind + "'");
    }
  }

  for (auto& pv : pending_visits) {
    auto it = archive.origins.find(pv.origin_url);
    if (it == archive.origins.end()) {
      bad_record(source_name, pv.line,
                 "visit references unknown origin " + pv.origin_url);
    }
    it->second.visits.push_back(pv.visit);
  }
  for (auto& [url, origin] : archive.origins) {
    std::sort(origin.visits.begin(), origin.visits.end(),
              [](const OriginVisit& a, const OriginVisit& b) {
                return a.timestamp < b.timestamp;
              });
    for (std::size_t i = 1; i < origin.visits.size(); ++i) {
      if (origin.visits[i - 1].timestamp == origin.visits[i].timestamp) {
        raise(ErrorKind::format, std::string(source_name) + ": origin " + url +
                                     " has two visits at timestamp " +
                                     std::to_string(origin.visits[i].timestamp));
      }
    }
    for (const auto& v : origin.visits) {
      if (v.timestamp > archive.export_timestamp) {
        raise(ErrorKind::format,
              std::string(source_name) + ": origin " + url + " visited at " +
                  format_rfc3339(v.timestamp) + ", after the export timestamp");
      }
    }
  }

  throw_on_integrity_issues(archive, source_name);
  return archive;
}

ArchiveGraph load_archive(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) raise(ErrorKind::io, "read failure on " + path.string());
  return archive_from_jsonl(buffer.str(), path.string());
}

std::string archive_to_jsonl(const ArchiveGraph& archive) {
  throw_on_integrity_issues(archive, "save");

  std::string body;
  for (int rank = 1; rank <= 5; ++rank) {
    for (const auto& [id, node] : archive.nodes) {
      if (kind_rank(node_type_tag(id.type) == "cnt"     ? "content"
                    : node_type_tag(id.type) == "dir"   ? "directory"
                    : node_type_tag(id.type) == "rev"   ? "revision"
                    : node_type_tag(id.type) == "rel"   ? "release"
                                                        : "snapshot") != rank) {
        continue;
      }
      body += node_to_json(id, node).dump();
      body += '\n';
    }
  }
  for (const auto& [url, origin] : archive.origins) {
    body += json{{"kind", "origin"}, {"url", url}}.dump();
    body += '\n';
  }
  for (const auto& [url, origin] : archive.origins) {
    for (const auto& v : origin.visits) {
      body += json{{"kind", "visit"},
                   {"origin", url},
                   {"snapshot", v.snapshot.hex()},
                   {"timestamp", format_rfc3339(v.timestamp)}}
                  .dump();
      body += '\n';
    }
  }

  json meta = meta_to_json(archive);
  const std::string digest = sha256_hex(meta.dump() + "\n" + body);
  meta["file_digest"] = digest;
  return meta.dump() + "\n" + body;
}

void save_archive(const ArchiveGraph& archive, const std::filesystem::path& path) {
  const std::string text = archive_to_jsonl(archive);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::io, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out.good()) raise(ErrorKind::io, "write failure on " + path.string());
}

}  // namespace pvdb
