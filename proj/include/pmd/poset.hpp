#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pmd/errors.hpp"

namespace pmd {

enum class ShapeKind { Chain, Grid, Zigzag, Triangle, Opposite, Custom };

// A monotone staircase of lattice points: steps go right (+1,0) or down (-(0,1)),
// inside the window [x0,x1] x [y0,y1]. The fence poset Z(gamma) is the set of
// path points under the product order.
struct ZigzagPath {
    int sx = 0, sy = 0;            // start lattice point
    std::vector<bool> steps_right; // true = right, false = down
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    // Normalized path: start (0, #down), window = bounding box [0,#right]x[0,#down].
    static ZigzagPath from_steps(const std::vector<bool>& steps);

    std::vector<std::pair<int, int>> points() const;
    bool crosses_corner_to_corner() const;
    // Invariant: path inside window, enters on the top/left boundary, exits on
    // the bottom/right boundary. Throws MalformedShape otherwise.
    void validate() const;
};

enum class RegionLabel { Z, RU, RL };

struct FinitePoset {
    int size = 0;
    std::vector<std::pair<int, int>> covers; // (src, dst): dst covers src
    std::vector<std::vector<char>> leq_;     // full order relation

    ShapeKind kind = ShapeKind::Custom;
    int m = 0, n = 0, cutoff = 0;             // Chain: n; Grid/Triangle: m, n (+cutoff)
    std::vector<bool> zz_steps;               // Zigzag step list, true = right
    std::shared_ptr<const FinitePoset> opposite_of;
    std::vector<std::pair<int, int>> coords;  // per-element lattice coordinates

    bool leq(int a, int b) const { return leq_[a][b]; }
    int coord_id(int i, int j) const; // -1 if absent
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

PosetPtr build_chain(int n);
PosetPtr build_grid(int m, int n);                   // id = i*n + j
PosetPtr build_triangle(int m, int n, int cutoff);   // points with i + j > cutoff
PosetPtr build_zigzag(const std::vector<bool>& steps_right); // ids in path order
PosetPtr build_opposite(const PosetPtr& P);          // unwraps a double opposite
PosetPtr build_custom(int size, const std::vector<std::pair<int, int>>& covers);

bool poset_equal(const FinitePoset& P, const FinitePoset& Q);

// Linear extension: x before y whenever x < y. Deterministic (sorted by number
// of elements below, then id).
std::vector<int> topo_order(const FinitePoset& P);

// Subsets are sorted element-id vectors.
bool is_ideal(const FinitePoset& P, const std::vector<int>& s);
bool is_filter(const FinitePoset& P, const std::vector<int>& s);
bool is_convex(const FinitePoset& P, const std::vector<int>& s);
bool is_connected(const FinitePoset& P, const std::vector<int>& s); // fence condition
bool is_interval(const FinitePoset& P, const std::vector<int>& s);
bool is_directed(const FinitePoset& P, const std::vector<int>& s);
std::vector<int> principal_ideal(const FinitePoset& P, int x);

enum class BlockType { db, bb, vb, hb };
std::string block_type_name(BlockType t);

// Applicable block tags for a carrier on a Grid or TriangleRegion poset; empty
// result means "not a block". Throws CarrierNotSubset / NotGridLike.
std::vector<BlockType> classify_block(const std::vector<int>& carrier, const FinitePoset& grid);

// Labels for every window lattice point, row-major over the window grid
// (element (i,j) of Grid(x1-x0+1, y1-y0+1) is lattice point (x0+i, y0+j)).
std::vector<RegionLabel> region_split(const ZigzagPath& path);

// For fence element k (path order), the id of its lattice point in the window
// grid of the path.
std::vector<int> fence_window_ids(const ZigzagPath& path);

} // namespace pmd
