#pragma once

#include <string>

#include "pmd/structure.hpp"

namespace pmd {

// Barcode plot: one rect per bar, bars ordered by (birth, death, multiplicity),
// multiplicity labelled at the right end, axis lines on the left and bottom.
// Deterministic byte-for-byte for equal inputs.
std::string render_barcode_svg(const Barcode& bc, int poset_size);

// Block plot over a grid-like poset: lattice grid lines, one rect per block
// spanning its coordinate bounding box, fill color keyed by block type, and a
// text legend naming each block's types and multiplicity.
std::string render_blocklist_svg(const BlockList& bl, const FinitePoset& P);

} // namespace pmd
