#pragma once

#include <filesystem>
#include <string>

#include "hjlab/grid_field.hpp"

namespace hjlab {

/// CSV schema: t,x[,y],value with 17 significant digits, one row per
/// space-time node. A JSON sidecar (same path, .json extension) carries the
/// grid metadata; readers use it when present and infer otherwise.
void write_space_time_field(const std::filesystem::path& csv_path, const SpaceTimeField& f);
SpaceTimeField read_space_time_field(const std::filesystem::path& csv_path);

/// Single slice convenience wrappers (stored as a one-time stack at t = 0).
void write_field(const std::filesystem::path& csv_path, const Field& f);

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Writes text to path atomically (temp file + rename).
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hjlab
