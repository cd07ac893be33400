#include "pvdb/manifest.hpp"

#include <string_view>

#include "pvdb/error.hpp"
#include "pvdb/hash.hpp"
#include "pvdb/hex.hpp"

namespace pvdb {

NodeType node_type(const Node& node) {
  struct Visitor {
    NodeType operator()(const Content&) const { return NodeType::content; }
    NodeType operator()(const Directory&) const { return NodeType::directory; }
    NodeType operator()(const Revision&) const { return NodeType::revision; }
    NodeType operator()(const Release&) const { return NodeType::release; }
    NodeType operator()(const Snapshot&) const { return NodeType::snapshot; }
  };
  return std::visit(Visitor{}, node);
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  raise(ErrorKind::invalid_node, "invalid node: " + what);
}

void append_field(std::string& out, std::string_view name, std::string_view value) {
  out += name;
  out += ':';
  out += std::to_string(value.size());
  out += ':';
  out += value;
}

std::string field_line(std::string_view name, std::string_view value) {
  std::string out;
  append_field(out, name, value);
  return out;
}

std::string reference(const Swhid& id) {
  std::string out = id.hex();
  out += node_type_byte(id.type);
  return out;
}

void check_entry_name(std::string_view name) {
  if (name.empty()) invalid("empty directory entry name");
  if (name == "." || name == "..") invalid("directory entry named '" + std::string(name) + "'");
  if (name.find('/') != std::string_view::npos) {
    invalid("directory entry name contains '/': " + std::string(name));
  }
}

struct ManifestBuilder {
  std::vector<std::string> lines;

  std::string operator()(const Content& c) {
    if (c.length < 0) invalid("negative content length");
    lines.push_back(field_line("length", std::to_string(c.length)));
    lines.push_back(
        field_line("payload", to_hex(c.payload_digest.data(), c.payload_digest.size())));
    return join("cnt");
  }

  std::string operator()(const Directory& d) {
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
      const DirectoryEntry& e = d.entries[i];
      check_entry_name(e.name);
      if (e.target.type != NodeType::directory && e.target.type != NodeType::content &&
          e.target.type != NodeType::revision) {
        invalid("directory entry '" + e.name + "' targets a " +
                std::string(node_type_tag(e.target.type)) + " node");
      }
      if (i > 0) {
        if (d.entries[i - 1].name == e.name) invalid("duplicate entry name " + e.name);
        if (d.entries[i - 1].name > e.name) invalid("directory entries not sorted");
      }
      std::string value;
      append_field(value, "perms", std::to_string(e.perms));
      append_field(value, "target-type", node_type_tag(e.target.type));
      append_field(value, "target", reference(e.target));
      append_field(value, "name", e.name);
      lines.push_back(field_line("entries", value));
    }
    return join("dir");
  }

  std::string operator()(const Revision& r) {
    if (r.tree.type != NodeType::directory) invalid("revision tree is not a directory");
    lines.push_back(field_line("tree", reference(r.tree)));
    for (const Swhid& parent : r.parents) {
      if (parent.type != NodeType::revision) invalid("revision parent is not a revision");
      lines.push_back(field_line("parents", reference(parent)));
    }
    lines.push_back(field_line("author", r.author));
    lines.push_back(field_line("author_ts", std::to_string(r.author_timestamp)));
    lines.push_back(field_line("committer", r.committer));
    lines.push_back(field_line("committer_ts", std::to_string(r.committer_timestamp)));
    lines.push_back(field_line("message", r.message));
    return join("rev");
  }

  std::string operator()(const Release& r) {
    lines.push_back(field_line("name", r.name));
    lines.push_back(field_line("target-type", node_type_tag(r.target.type)));
    if (r.target.type == NodeType::snapshot) invalid("release targets a snapshot");
    lines.push_back(field_line("target", reference(r.target)));
    lines.push_back(field_line("timestamp", std::to_string(r.timestamp)));
    lines.push_back(field_line("message", r.message));
    return join("rel");
  }

  std::string operator()(const Snapshot& s) {
    for (std::size_t i = 0; i < s.branches.size(); ++i) {
      const SnapshotBranch& b = s.branches[i];
      if (b.target.type != NodeType::revision && b.target.type != NodeType::release) {
        invalid("branch '" + b.name + "' targets a " +
                std::string(node_type_tag(b.target.type)) + " node");
      }
      if (i > 0) {
        if (s.branches[i - 1].name == b.name) invalid("duplicate branch name " + b.name);
        if (s.branches[i - 1].name > b.name) invalid("snapshot branches not sorted");
      }
      std::string value;
      append_field(value, "target-type", node_type_tag(b.target.type));
      append_field(value, "target", reference(b.target));
      append_field(value, "name", b.name);
      lines.push_back(field_line("branches", value));
    }
    return join("snp");
  }

  std::string join(std::string_view tag) const {
    std::string out;
    out += tag;
    out += '\n';
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i > 0) out += '\n';
      out += lines[i];
    }
    return out;
  }
};

}  // namespace

std::string canonical_manifest(const Node& node) {
  return std::visit(ManifestBuilder{}, node);
}

Swhid compute_swhid(const Node& node) {
  const Sha1Digest digest = sha1(canonical_manifest(node));
  Swhid id;
  id.type = node_type(node);
  id.digest = digest;
  return id;
}

}  // namespace pvdb
