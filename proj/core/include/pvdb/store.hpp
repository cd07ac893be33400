#pragma once

#include <filesystem>
#include <string>

#include "pvdb/model.hpp"

namespace pvdb {

// Line-delimited exchange format (`.pvdb.jsonl`): one self-describing JSON
// record per line with a `kind` discriminator. The `meta` record comes
// first and exactly once; hashes are lowercase hex; timestamps are RFC 3339
// UTC with a `Z` suffix. Files written by save_archive carry a `file_digest`
// in the meta record covering every other byte of the file, so any
// single-byte tamper is detectable; files without the field (hand-written
// fixtures) skip that check.

inline constexpr int kExchangeFormatVersion = 1;
inline constexpr std::string_view kExchangeExtension = ".pvdb.jsonl";

/// Parses, assembles, and fully verifies an archive. Record order in the
/// file does not affect the result. Throws Error(format) with a line number
/// on parse problems, Error(conflict) on duplicate ids with differing
/// bodies, Error(closure) on dangling references, Error(integrity) on id or
/// file-digest mismatches.
ArchiveGraph load_archive(const std::filesystem::path& path);
ArchiveGraph archive_from_jsonl(std::string_view text, std::string_view source_name);

/// Canonical serialization: records sorted by (kind rank, id or url); equal
/// archive values produce byte-identical files. The archive must verify
/// clean; save refuses to write a corrupt archive.
void save_archive(const ArchiveGraph& archive, const std::filesystem::path& path);
std::string archive_to_jsonl(const ArchiveGraph& archive);

}  // namespace pvdb
