#ifndef BTOF_SYNTH_HPP
#define BTOF_SYNTH_HPP

#include <string>
#include <vector>

#include "btof/image.hpp"

namespace btof {

enum class SynthKind { CenterObject, BoundaryObject, TwoObjects };

SynthKind parse_synth_kind(const std::string& name); // "center-object", ...
const char* synth_kind_name(SynthKind kind);

struct SynthSample {
    RasterImage image;
    BinaryMask mask;
    std::string stem; // "<kind>_<seed>"
};

// 256x256 image with a chromatically distinct object (uniform color plus
// mild noise) over a textured background, fully determined by the seed.
// boundary-object places the object touching exactly one image border.
SynthSample make_synth_sample(SynthKind kind, unsigned seed);

// Writes count samples (seeds seed..seed+count-1) to
// <out_dir>/images/<stem>.png and <out_dir>/masks/<stem>.png.
// Returns the image paths in generation order.
std::vector<std::string> synth(SynthKind kind, unsigned seed, int count,
                               const std::string& out_dir);

} // namespace btof

#endif
