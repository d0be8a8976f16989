#pragma once

#include <filesystem>
#include <string>

#include "alp/state.hpp"

namespace alp::io {

/// Field snapshot: <name>.f64 holds the raw component-major little-endian
/// doubles, <name>.meta is a small text header (grid shape, lengths, name,
/// algebra dim, component order).
void write_field(const std::filesystem::path& dir, const std::string& name,
                 const fields::Field& f, int algebra_dim);
fields::Field read_field(const std::filesystem::path& dir, const std::string& name,
                         const fields::Grid& g);

void write_state(const std::filesystem::path& dir, const std::string& prefix,
                 const models::FluidState& st);

}  // namespace alp::io
