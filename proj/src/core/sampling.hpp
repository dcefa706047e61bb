#pragma once

#include <cstdint>
#include <vector>

#include "core/geometry.hpp"

namespace hopfroots::geom {

/// SplitMix64 step; used to derive per-dimension scramble offsets from a seed.
std::uint64_t splitmix64(std::uint64_t& state);

/// Radical-inverse (van der Corput) value of `index` in the given base.
double radical_inverse(std::uint64_t index, std::uint32_t base);

/// Deterministic quasi-uniform points on S^2: Halton sequence with a
/// seed-derived Cranley-Patterson rotation, pushed through the inverse-CDF
/// construction (uniform height, uniform longitude). Same seed, same bytes.
std::vector<Vec3> sample_s2(std::size_t n, std::uint64_t seed);

/// Deterministic quasi-uniform points on S^3. The inverse-CDF construction in
/// fibered coordinates: (u,a,b) uniform in [0,1)^3 maps to
/// (sqrt(u) e^{2*pi*i*a}, sqrt(1-u) e^{2*pi*i*b}), which carries Lebesgue
/// measure to the round measure exactly.
std::vector<Vec4> sample_s3(std::size_t n, std::uint64_t seed);

}  // namespace hopfroots::geom
