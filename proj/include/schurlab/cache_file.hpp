#pragma once

#include <cstddef>
#include <string>

#include "schurlab/schur_vector.hpp"

namespace schurlab {

inline constexpr const char* kCacheHeader = "# schurlab lr-cache v1";

/// Text format: the header line, optional "# key: value" comment lines, then
/// one record "outer|inner|content count" per line.

/// Merges the records of `path` into `cache` and returns how many were read.
/// A missing file reads as empty. Malformed lines or a record that
/// disagrees with a cached value throw InvalidInput.
std::size_t load_cache(const std::string& path, LrCache& cache);

/// Writes the whole cache (sorted) atomically via a temporary file.
void save_cache(const std::string& path, const LrCache& cache, const std::string& created_by = "");

}  // namespace schurlab
