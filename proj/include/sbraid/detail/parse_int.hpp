#pragma once

#include <charconv>
#include <cstdint>
#include <string_view>

namespace sbraid::detail {

// Optionally signed decimal integer spanning all of `text`.
inline bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) {
    return false;
  }
  auto first = text.data();
  auto last  = text.data() + text.size();
  if (*first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace sbraid::detail
