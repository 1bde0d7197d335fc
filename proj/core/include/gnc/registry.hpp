#ifndef GNC_REGISTRY_HPP
#define GNC_REGISTRY_HPP

#include <stdexcept>
#include <vector>

#include "gnc/sprime.hpp"

namespace gnc {

struct UnknownSystem : std::runtime_error {
  explicit UnknownSystem(const std::string& name)
      : std::runtime_error("unknown system: " + name) {}
};

// The frozen systems. Day-indexed systems use n = 2 (the smallest case the
// consistency theorems cover); the self-code machine index defaults to 0.
// Every system with a necessitation rule also registers its axiom-only
// counterpart under "<name>_sprime" ("selfcode_sprime_n" keeps its
// traditional name).
const System& registry(const std::string& name);
bool is_registered(const std::string& name);
std::vector<std::string> registry_names();

// Closure-materialization depth for a registered S' system (2 by default).
unsigned sprime_depth(const std::string& name);

// Parameterized builders, exposed for tests and the footnote variant.
System make_surprise_original(unsigned days);
System make_surprise_weak(unsigned days);
System make_fused(unsigned days);
System make_selfcode(const Nat& machine_index);

// Candidate-axiom schemas used by the prober (lob, ect).
const Schema& probe_schema_registry(const std::string& name);
std::vector<std::string> probe_schema_names();

}  // namespace gnc

#endif
