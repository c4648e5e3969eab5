#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fairicl {

// 64-bit FNV-1a. Used for content hashes, cache keys and sub-seed derivation.
constexpr std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Uniform draw in [0, n) by rejection; mt19937_64 is pinned by the standard,
// so results are identical across platforms (unlike uniform_int_distribution).
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

// Number of UTF-8 code points; the report renderer pads by this, treating
// arrows and the infinity sign as width one.
std::size_t display_width(std::string_view s);

std::string iso8601_utc_now();

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace fairicl
