#ifndef GNC_SYSIO_HPP
#define GNC_SYSIO_HPP

#include <string>

#include "gnc/system.hpp"

namespace gnc {

struct SystemIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// System file format, one declaration per line:
//   system <name>
//   global <axiom>: [closure] <schema>[ where lonefree(?m, x)]
//   local  <axiom>: ...
//   global <axiom>: @valid(K[, pred])     K[f] for valid f
//   global <axiom>: @closure(K[, pred])   K[f] for f an instance of a global line
//   nec <op> [pred]
//   validity taut|taut+fo
//   # comment
// Serialization reproduces the same syntax. 'where' is reserved.
System parse_system(const std::string& text);
System load_system_file(const std::string& path);
std::string format_system(const System& s);

}  // namespace gnc

#endif
