#include "pvdb/swhid.hpp"

#include "pvdb/error.hpp"
#include "pvdb/hex.hpp"

namespace pvdb {

std::string_view node_type_tag(NodeType t) {
  switch (t) {
    case NodeType::content: return "cnt";
    case NodeType::directory: return "dir";
    case NodeType::revision: return "rev";
    case NodeType::release: return "rel";
    case NodeType::snapshot: return "snp";
  }
  return "???";
}

char node_type_byte(NodeType t) {
  switch (t) {
    case NodeType::content: return 'c';
    case NodeType::directory: return 'd';
    case NodeType::revision: return 'r';
    case NodeType::release: return 'l';
    case NodeType::snapshot: return 's';
  }
  return '?';
}

std::optional<NodeType> node_type_from_tag(std::string_view tag) {
  if (tag == "cnt") return NodeType::content;
  if (tag == "dir") return NodeType::directory;
  if (tag == "rev") return NodeType::revision;
  if (tag == "rel") return NodeType::release;
  if (tag == "snp") return NodeType::snapshot;
  return std::nullopt;
}

std::string Swhid::hex() const { return to_hex(digest.data(), digest.size()); }

std::string Swhid::to_string() const {
  std::string out = "swh:1:";
  out += node_type_tag(type);
  out += ':';
  out += hex();
  return out;
}

Swhid Swhid::parse(std::string_view text) {
  // swh:1:<tag>:<40 hex>
  if (text.size() != 50 || text.substr(0, 6) != "swh:1:" || text[9] != ':') {
    raise(ErrorKind::format, "bad SWHID: " + std::string(text));
  }
  const auto type = node_type_from_tag(text.substr(6, 3));
  if (!type) raise(ErrorKind::format, "bad SWHID node type: " + std::string(text));
  return from_hex(*type, text.substr(10));
}

Swhid Swhid::from_hex(NodeType type, std::string_view hex40) {
  Swhid id;
  id.type = type;
  if (!pvdb::from_hex(hex40, id.digest.data(), id.digest.size())) {
    raise(ErrorKind::format, "bad node digest: expected 40 hex chars, got '" +
                                 std::string(hex40) + "'");
  }
  return id;
}

}  // namespace pvdb
