#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rcg {

using VarId = std::uint32_t;

// Interned variable names. The spectral/deformation variables z, z1, z2, q
// get the lowest ids; parameter symbols used by the K-matrix families and
// the boundary ansatz are pre-registered after them so monomial order is
// stable across runs. Unknown names are registered on first use.
VarId var_id(std::string_view name);
const std::string& var_name(VarId id);

namespace vars {
VarId z();
VarId z1();
VarId z2();
VarId q();
}  // namespace vars

}  // namespace rcg
