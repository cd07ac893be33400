#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pvdb/model.hpp"

namespace pvdb {

/// Parameters for the deterministic forge simulator. Everything the
/// simulator emits is a pure function of (params, export times); there is no
/// global generator state, so per-origin generation can run in any order or
/// in parallel without changing a single byte of output.
struct SimParams {
  std::uint64_t seed{};
  std::int64_t origin_count{};
  std::vector<std::pair<std::string, double>> forge_hosts{{"github.com", 1.0}};
  std::int64_t time_start{};
  std::int64_t time_end{};
  std::int64_t visits_min{1};
  std::int64_t visits_max{1};
  std::int64_t growth_min{1};  // revisions added per visit
  std::int64_t growth_max{1};
  double marker_file_probability{0.0};
  std::string marker_file_name{"AndroidManifest.xml"};
  std::vector<std::string> branch_name_pool{"refs/heads/main"};

  void validate() const;  // throws Error(format)

  static SimParams from_json_file(const std::filesystem::path& path);
  static SimParams from_json(std::string_view text, std::string_view source_name);
  std::string to_json() const;
};

/// Synthesizes one archive per export time (strictly increasing). The series
/// is append-only: each archive is contained in the next, every origin's
/// visit sequence grows by suffix only, and all archives verify clean.
std::vector<ArchiveGraph> synthesize(const SimParams& params,
                                     const std::vector<std::int64_t>& export_times);

}  // namespace pvdb
