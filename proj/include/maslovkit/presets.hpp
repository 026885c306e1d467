#pragma once

// Built-in inputs, addressable on the command line as preset:NAME. The files
// under fixtures/ hold the same JSON.

#include <optional>
#include <string>
#include <vector>

#include "maslovkit/json_io.hpp"
#include "maslovkit/realmaslov.hpp"

namespace maslovkit::presets {

/// Sorted names of the JSON presets.
std::vector<std::string> names();
std::optional<json::Json> lookup(const std::string& name);

/// Real polynomials accepted by `maslov real --preset`.
std::optional<RealPolynomial> real_polynomial(const std::string& name);

/// Cluster stabilizer ⟨(x + x^-1, 1)⟩ over F_5[x^±].
StabilizerModule cluster_module();
/// ⟨(1, 0)⟩: the X-type product state.
StabilizerModule product_state_module();
/// ⟨(0, 1)⟩: the Z-type product state.
StabilizerModule product_state_z_module();
/// Maps product_state_module() onto cluster_module(): E0(1), E1(-1), E0(1), E1(x + x^-1).
Circuit cluster_circuit();
/// Maps product_state_z_module() onto cluster_module(): E1(x + x^-1).
Circuit cluster_circuit_z();

}  // namespace maslovkit::presets
