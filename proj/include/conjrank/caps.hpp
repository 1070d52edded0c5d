#pragma once

#include <string>

namespace conjrank {

// Size bounds for the enumeration kernels.  The double-degree work in the
// biset checks squares the group order, so the defaults are conservative.
struct Caps {
  long order = 5000;       // max elements when closing a generating set
  long subgroups = 20000;  // max subgroups during lattice enumeration
  long stability_order = 16;  // max |S| for the full biset stability check

  static Caps defaults() { return Caps{}; }
};

// Parses "order=N,subgroups=M,stability=K" (any subset, any order).
// Unknown keys raise ParseError.  Used for the CONJRANK_CAPS variable.
Caps parse_caps(const std::string& text, Caps base = Caps::defaults());

}  // namespace conjrank
