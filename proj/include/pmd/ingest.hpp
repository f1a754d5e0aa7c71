#pragma once

#include <cstdint>
#include <string>

#include "pmd/module.hpp"

namespace pmd {

// Exact rational, normalized so den > 0 and gcd(|num|, den) = 1. Comparisons
// cross-multiply in 128 bits, so no overflow for any normalized int64 pair.
struct Rational {
    long long num = 0;
    long long den = 1;
};
Rational make_rational(long long num, long long den);
Rational parse_rational(const std::string& text); // "3", "-7/2"
std::string rational_to_string(const Rational& r);
int rational_cmp(const Rational& a, const Rational& b); // -1 / 0 / +1

// Samples of a piecewise linear function on an interval, with the threshold
// grids the persistence queries run over.
struct SampledFunction {
    std::vector<Rational> values;
    std::vector<Rational> sublevel_thresholds; // strictly increasing
    std::vector<Rational> s_grid, t_grid;      // strictly increasing, max s < min t
};

// H_0 of the sublevel sets of the sample graph: sample k is present at
// threshold t when f(k) <= t, consecutive present samples are adjacent.
// Components map by containment; the component with the lowest minimum
// survives every merge (elder rule), which fixes the basis order.
PersistenceModule sublevel_h0(const SampledFunction& f, const FieldSpec& F);

// H_0 of the open interlevel sets {x : s < f(x) < t} of the piecewise linear
// interpolation, over Grid(#s, #t) with s decreasing along the first axis so
// that both axes enlarge the set. The result is checked middle exact before it
// is returned; a failure there is a bug, not an input error.
PersistenceModule interlevel_h0(const SampledFunction& f, const FieldSpec& F);

struct GeneratorSpec {
    PosetPtr poset;
    std::vector<std::pair<std::vector<int>, int>> carriers; // (interval, multiplicity)
    bool scramble = true;
    std::uint64_t seed = 0;
};
struct GeneratedModule {
    PersistenceModule module;
    std::vector<std::pair<std::vector<int>, int>> ground_truth; // sorted, aggregated
    std::vector<Matrix> conjugators; // the change of basis used at each element
};
// Direct sum of the requested interval modules, optionally conjugated by
// seeded random invertible matrices. Ground truth and conjugators are kept so
// tests can check decompositions against a known answer.
GeneratedModule random_module(const GeneratorSpec& spec, const FieldSpec& F);

} // namespace pmd
