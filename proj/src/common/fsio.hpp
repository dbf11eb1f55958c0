#ifndef SEEDSTAB_COMMON_FSIO_HPP
#define SEEDSTAB_COMMON_FSIO_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace seedstab {

std::string read_file(const std::filesystem::path& path);

// Write-temp-then-rename so concurrent workers and aborted runs never leave a
// half-written file behind.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

std::vector<std::string> read_lines(const std::filesystem::path& path);

// One entry per line, trailing newline, skipping nothing.
void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

// Deterministic shortest round-trip formatting for doubles (CSV output).
std::string format_double(double v);

}  // namespace seedstab

#endif
