#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bkplan {

std::vector<std::string> split_ws(const std::string &s);
std::string trim(const std::string &s);
bool starts_with(const std::string &s, const std::string &prefix);
bool ends_with(const std::string &s, const std::string &suffix);
std::string join(const std::vector<std::string> &parts, const std::string &sep);

// Fixed-format double for reproducible reports.
std::string format_double(double value, int decimals = 4);

// FNV-1a over a byte string; used for content fingerprints.
std::uint64_t fnv1a(const std::string &bytes);

} // namespace bkplan
