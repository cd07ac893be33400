#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace pvdb {

enum class NodeType : std::uint8_t { content, directory, revision, release, snapshot };

/// 3-letter tag used in the canonical text rendering: cnt/dir/rev/rel/snp.
std::string_view node_type_tag(NodeType t);

/// 1-byte tag used when a child reference is embedded in a manifest.
char node_type_byte(NodeType t);

std::optional<NodeType> node_type_from_tag(std::string_view tag);

using NodeDigest = std::array<std::uint8_t, 20>;

/// Intrinsic persistent identifier of a graph node: a node-type tag plus the
/// hash of the node's canonical manifest. Renders as `swh:1:<type>:<40 hex>`.
struct Swhid {
  NodeType type{};
  NodeDigest digest{};

  auto operator<=>(const Swhid&) const = default;

  std::string hex() const;
  std::string to_string() const;

  /// Parses `swh:1:<type>:<40 hex>`. Throws Error(format).
  static Swhid parse(std::string_view text);
  /// Builds from a bare 40-hex digest. Throws Error(format).
  static Swhid from_hex(NodeType type, std::string_view hex40);
};

struct SwhidHash {
  std::size_t operator()(const Swhid& id) const {
    std::size_t h;
    static_assert(sizeof h <= sizeof(NodeDigest));
    std::memcpy(&h, id.digest.data(), sizeof h);
    return h ^ static_cast<std::size_t>(id.type);
  }
};

}  // namespace pvdb
