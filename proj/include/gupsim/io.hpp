#pragma once

#include <filesystem>
#include <string>

namespace gupsim::io {

// Shortest decimal string that round-trips the double (RFC-4180 friendly,
// '.' decimal separator).
std::string format_double(double v);

// Write via a temp file in the same directory, then rename. On any error the
// destination is left untouched.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace gupsim::io
