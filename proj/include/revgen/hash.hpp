#ifndef REVGEN_HASH_HPP
#define REVGEN_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace revgen {

// FNV-1a 64-bit, used for content hashes of configs, vocabularies and
// emitted artifacts.
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace revgen

#endif  // REVGEN_HASH_HPP
