#pragma once

#include <string>
#include <string_view>

#include "fncalc/bundle.hpp"
#include "fncalc/connection.hpp"

namespace fncalc {

// Connection spec (JSON):
//   {"dim": 3, "coords": ["x", "y", "z"], "phi": [["0", "0", "0"], ...]}
// phi[row][col] = dx^row(φ ∂_col); entries are polynomial strings or numbers.
// Malformed text throws Error(ParseError); a well-formed but non-idempotent
// matrix throws Error(NotIdempotent).
Connection parse_connection_spec(std::string_view text);
std::string render_connection_spec(const Connection& conn);

// Bundle spec (JSON):
//   {"base_coords": ["x", "y"], "fiber_coords": ["z"], "gamma": [["0", "x"]]}
// gamma is fiber-dim × base-dim over the union of the coordinates.
ProductBundle parse_bundle_spec(std::string_view text);
std::string render_bundle_spec(const ProductBundle& pb);

// Reads a whole file. Throws Error(IoError).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace fncalc
