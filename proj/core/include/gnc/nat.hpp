#ifndef GNC_NAT_HPP
#define GNC_NAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>

namespace gnc {

// Unbounded natural number. Godel numbers of even small formulas overflow
// any machine word, so everything numeric in the encoding layer uses Nat.
using Nat = boost::multiprecision::cpp_int;

// Cantor pairing <x,y> = (x+y)(x+y+1)/2 + y, a bijection N^2 -> N.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

// Injective code for identifiers: leading-1 sentinel, then base-256 digits.
// Decodable; fails on byte values that cannot occur in an identifier.
Nat string_code(const std::string& s);
std::optional<std::string> string_decode(const Nat& n);

}  // namespace gnc

#endif
