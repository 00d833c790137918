#pragma once

#include <string>

namespace subcrit {

/// Write a whole file atomically: stream to "<path>.tmp.<pid>", then rename.
/// A failed write never leaves a partial file at the destination.
void atomic_write_text(const std::string& path, const std::string& content);

/// Shortest round-trip decimal form of a double ("nan" for NaN).
std::string format_double(double x);

/// Read a whole file; throws std::runtime_error with the path on failure.
std::string read_text_file(const std::string& path);

}  // namespace subcrit
