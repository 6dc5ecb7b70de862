#pragma once

#include <vector>

#include "llip/common.hpp"

namespace llip {

// Width/height of a prediction block. Both must be powers of two in
// [kMinBlockSize, kMaxBlockSize]; the blend shifts require it.
struct BlockGeometry {
    int width = 0;
    int height = 0;

    std::size_t pixels() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    friend bool operator==(const BlockGeometry&, const BlockGeometry&) = default;
};

inline bool legal_geometry(const BlockGeometry& g) {
    return is_power_of_two(g.width) && is_power_of_two(g.height) &&
           g.width >= kMinBlockSize && g.width <= kMaxBlockSize &&
           g.height >= kMinBlockSize && g.height <= kMaxBlockSize;
}

void validate_geometry(const BlockGeometry& g);

// Already-decoded samples bordering a block: the row above it including the
// top-right corner (w+1 entries, positions (0,-1)..(w,-1)) and the column
// left of it including the bottom-left corner (h+1 entries, (-1,0)..(-1,h)).
struct ReconstructedBorder {
    std::vector<Sample> top;
    std::vector<Sample> left;
};

// A prediction block plus everything the filters need: geometry, bit depth,
// w*h prediction samples in raster order, and the reconstructed border.
struct BlockContext {
    BlockGeometry geometry;
    int bit_depth = 10;
    std::vector<Sample> prediction;
    ReconstructedBorder border;

    Sample pred_at(int x, int y) const {
        return prediction[static_cast<std::size_t>(y) * geometry.width + x];
    }
};

// Checks every BlockContext invariant; throws GeometryError on dimension
// problems and InputError on sample-range violations.
void validate_context(const BlockContext& ctx);

}  // namespace llip
