#pragma once

#include <iosfwd>
#include <string>

#include "crystals/kashiwara.hpp"

namespace crystals::kash {

// JSON schema:
// { "n": int,
//   "elements": [{"id", "coords", "weight", "phi": {...}, "eps": {...}}],
//   "edges": [{"i", "from", "to"}],
//   "highest": [ids] }
std::string to_json(const FiniteCrystal& B);
FiniteCrystal from_json(const std::string& text);

// Graphviz export, edge label i with one color per i.
std::string to_dot(const FiniteCrystal& B);

// Flat CSV: one element per row plus one edge per row.
std::string to_csv(const FiniteCrystal& B);

}  // namespace crystals::kash
