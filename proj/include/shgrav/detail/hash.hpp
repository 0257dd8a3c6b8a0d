#pragma once

#include <cstdint>
#include <cstring>
#include <string>

namespace shgrav::detail {

/// FNV-1a, used for cheap content fingerprints in provenance records.
struct Fnv1a {
  std::uint64_t state = 0xcbf29ce484222325ull;

  void feed(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state ^= p[i];
      state *= 0x100000001b3ull;
    }
  }

  void feed(double v) { feed(&v, sizeof v); }
  void feed(std::int64_t v) { feed(&v, sizeof v); }
  void feed(const std::string& s) { feed(s.data(), s.size()); }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = state;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = digits[v & 0xf];
      v >>= 4;
    }
    return out;
  }
};

}  // namespace shgrav::detail
