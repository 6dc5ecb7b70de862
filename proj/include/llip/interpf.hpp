#pragma once

#include <span>
#include <vector>

#include "llip/block.hpp"

namespace llip {

// Integer inter-prediction filter: each predicted pixel is blended with a
// vertical and a horizontal extrapolation of the reconstructed border, all
// in exact integer arithmetic (floor-rounded weighted averages). The per-op
// functions below are the serial reference; filter_blocks() is the
// OpenMP batch kernel over independent blocks.

struct Neighbors {
    Sample r1;  // top row, same column:        (x, -1)
    Sample r2;  // top-right corner:            (w, -1)
    Sample r3;  // left column, same row:       (-1, y)
    Sample r4;  // bottom-left corner:          (-1, h)
};

inline int floor_log2(int v) {
    int r = 0;
    while (v > 1) {
        v >>= 1;
        ++r;
    }
    return r;
}

// Bounds-checked border fetch for pixel (x, y).
Neighbors gather_neighbors(const BlockContext& ctx, int x, int y);

// Intermediates fit easily in 32 bits: (h-1)*max + h*max < 2^18 for
// h <= 128 and 12-bit samples.
inline Sample vertical_blend(int y, int h, Sample r1, Sample r4) {
    std::uint32_t acc = static_cast<std::uint32_t>(h - 1 - y) * r1 +
                        static_cast<std::uint32_t>(y + 1) * r4 +
                        static_cast<std::uint32_t>(h >> 1);
    return static_cast<Sample>(acc >> floor_log2(h));
}

inline Sample horizontal_blend(int x, int w, Sample r3, Sample r2) {
    std::uint32_t acc = static_cast<std::uint32_t>(w - 1 - x) * r3 +
                        static_cast<std::uint32_t>(x + 1) * r2 +
                        static_cast<std::uint32_t>(w >> 1);
    return static_cast<Sample>(acc >> floor_log2(w));
}

inline Sample combine_quarter(Sample pv, Sample ph) {
    return static_cast<Sample>((static_cast<std::uint32_t>(pv) + ph + 1u) >> 1);
}

inline Sample blend_output(Sample p, Sample pq) {
    return static_cast<Sample>((static_cast<std::uint32_t>(p) * 5u +
                                static_cast<std::uint32_t>(pq) * 3u + 4u) >> 3);
}

// Whole filter for one pixel given its gathered neighbors.
inline Sample filter_pixel(int w, int h, int x, int y, const Neighbors& n, Sample p) {
    Sample pv = vertical_blend(y, h, n.r1, n.r4);
    Sample ph = horizontal_blend(x, w, n.r3, n.r2);
    return blend_output(p, combine_quarter(pv, ph));
}

// Filters every pixel of the block in raster order. The input context is
// not mutated. `out` must hold exactly w*h samples.
void filter_block(const BlockContext& ctx, std::span<Sample> out);
std::vector<Sample> filter_block(const BlockContext& ctx);

// Batch kernel: filters independent blocks, parallel over blocks when
// threads > 1. Output order matches input order regardless of threading.
std::vector<std::vector<Sample>> filter_blocks(std::span<const BlockContext> blocks,
                                               int threads = 1);

}  // namespace llip
