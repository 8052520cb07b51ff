#pragma once

#include "bell/types.hpp"

namespace bell {

enum class EnumerationMode { Direct, DP };

// Deduplicated (W, Re z, Im z) images of all 9^n deterministic strategies.
struct MomentPointSet {
    int n = 0;
    std::vector<MomentPoint> points;  // sorted lexicographically by (w, re, im)

    bool contains(const MomentPoint& p) const;
};

// Direct mode enumerates the full 9^n product (n <= 8); DP mode folds one
// site at a time with a dedup merge after each fold (n <= 16).  Both return
// the same set.
MomentPointSet enumerate_moment_points(SiteCount n, EnumerationMode mode);

// Exact image of one strategy: w = prod (|a_k|+|b_k|)/2, z = prod (a_k + i b_k).
MomentPoint moment_of(const DeterministicStrategy& s);

}  // namespace bell
