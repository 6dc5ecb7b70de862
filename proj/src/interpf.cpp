#include "llip/interpf.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <string>

namespace llip {

void validate_geometry(const BlockGeometry& g) {
    if (!legal_geometry(g)) {
        throw GeometryError("illegal block geometry " + std::to_string(g.width) + "x" +
                            std::to_string(g.height) + " (power-of-two sizes in [" +
                            std::to_string(kMinBlockSize) + ", " +
                            std::to_string(kMaxBlockSize) + "] required)");
    }
}

void validate_context(const BlockContext& ctx) {
    validate_geometry(ctx.geometry);
    if (!valid_bit_depth(ctx.bit_depth)) {
        throw InputError("unsupported bit depth " + std::to_string(ctx.bit_depth));
    }
    const auto w = static_cast<std::size_t>(ctx.geometry.width);
    const auto h = static_cast<std::size_t>(ctx.geometry.height);
    if (ctx.prediction.size() != w * h) {
        throw GeometryError("prediction holds " + std::to_string(ctx.prediction.size()) +
                            " samples, expected " + std::to_string(w * h));
    }
    if (ctx.border.top.size() != w + 1) {
        throw GeometryError("top border holds " + std::to_string(ctx.border.top.size()) +
                            " samples, expected " + std::to_string(w + 1));
    }
    if (ctx.border.left.size() != h + 1) {
        throw GeometryError("left border holds " + std::to_string(ctx.border.left.size()) +
                            " samples, expected " + std::to_string(h + 1));
    }
    const Sample maxv = sample_max(ctx.bit_depth);
    auto in_range = [maxv](std::span<const Sample> v) {
        for (Sample s : v) {
            if (s > maxv) return false;
        }
        return true;
    };
    if (!in_range(ctx.prediction) || !in_range(ctx.border.top) || !in_range(ctx.border.left)) {
        throw InputError("sample value exceeds bit depth " + std::to_string(ctx.bit_depth));
    }
}

Neighbors gather_neighbors(const BlockContext& ctx, int x, int y) {
    const int w = ctx.geometry.width;
    const int h = ctx.geometry.height;
    if (x < 0 || x >= w || y < 0 || y >= h) {
        throw GeometryError("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") outside " + std::to_string(w) + "x" + std::to_string(h) +
                            " block");
    }
    return Neighbors{ctx.border.top[static_cast<std::size_t>(x)],
                     ctx.border.top[static_cast<std::size_t>(w)],
                     ctx.border.left[static_cast<std::size_t>(y)],
                     ctx.border.left[static_cast<std::size_t>(h)]};
}

namespace {

// Core loop; caller has validated the context and sized the output.
void filter_block_unchecked(const BlockContext& ctx, std::span<Sample> out) {
    const int w = ctx.geometry.width;
    const int h = ctx.geometry.height;
    const Sample r2 = ctx.border.top[static_cast<std::size_t>(w)];
    const Sample r4 = ctx.border.left[static_cast<std::size_t>(h)];
    const int log_w = floor_log2(w);
    const int log_h = floor_log2(h);
    const Sample* pred = ctx.prediction.data();
    for (int y = 0; y < h; ++y) {
        const std::uint32_t vert_base =
            static_cast<std::uint32_t>(y + 1) * r4 + static_cast<std::uint32_t>(h >> 1);
        const Sample r3 = ctx.border.left[static_cast<std::size_t>(y)];
        Sample* row = out.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            const Sample r1 = ctx.border.top[static_cast<std::size_t>(x)];
            const Sample pv = static_cast<Sample>(
                (static_cast<std::uint32_t>(h - 1 - y) * r1 + vert_base) >> log_h);
            const Sample ph = static_cast<Sample>(
                (static_cast<std::uint32_t>(w - 1 - x) * r3 +
                 static_cast<std::uint32_t>(x + 1) * r2 +
                 static_cast<std::uint32_t>(w >> 1)) >> log_w);
            row[x] = blend_output(pred[static_cast<std::size_t>(y) * w + x],
                                  combine_quarter(pv, ph));
        }
    }
}

}  // namespace

void filter_block(const BlockContext& ctx, std::span<Sample> out) {
    validate_context(ctx);
    if (out.size() != ctx.geometry.pixels()) {
        throw InputError("output span holds " + std::to_string(out.size()) +
                         " samples, expected " + std::to_string(ctx.geometry.pixels()));
    }
    filter_block_unchecked(ctx, out);
}

std::vector<Sample> filter_block(const BlockContext& ctx) {
    std::vector<Sample> out(ctx.geometry.pixels());
    filter_block(ctx, out);
    return out;
}

std::vector<std::vector<Sample>> filter_blocks(std::span<const BlockContext> blocks,
                                               int threads) {
    // Validation happens up front; no exception may leave the parallel loop.
    std::vector<std::vector<Sample>> outs(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        validate_context(blocks[i]);
        outs[i].resize(blocks[i].geometry.pixels());
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 1 ? threads : 1)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(blocks.size()); ++i) {
        filter_block_unchecked(blocks[static_cast<std::size_t>(i)],
                               outs[static_cast<std::size_t>(i)]);
    }
    return outs;
}

}  // namespace llip
