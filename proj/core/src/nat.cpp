#include "gnc/nat.hpp"

#include <algorithm>

namespace gnc {

Nat cantor_pair(const Nat& x, const Nat& y) {
  Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  // w = floor((sqrt(8z+1) - 1) / 2) recovers the diagonal index.
  Nat s = boost::multiprecision::sqrt(Nat(8 * z + 1));
  Nat w = (s - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat y = z - t;
  Nat x = w - y;
  return {x, y};
}

Nat string_code(const std::string& s) {
  Nat v = 1;
  for (unsigned char c : s) v = v * 256 + c;
  return v;
}

std::optional<std::string> string_decode(const Nat& n) {
  if (n < 1) return std::nullopt;
  std::string out;
  Nat v = n;
  while (v > 1) {
    unsigned byte = static_cast<unsigned>(v % 256);
    if (byte == 0) return std::nullopt;
    out.push_back(static_cast<char>(byte));
    v /= 256;
  }
  if (v != 1) return std::nullopt;
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace gnc
