#include "core/sampling.hpp"

#include <cmath>

namespace hopfroots::geom {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double inv = 1.0 / base;
  double scale = inv;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return value;
}

namespace {

// Per-dimension Cranley-Patterson shifts derived from the seed.
struct Shifts {
  double s[3];
  explicit Shifts(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (double& v : s) {
      v = static_cast<double>(splitmix64(state) >> 11) * 0x1p-53;
    }
  }
};

inline double shifted(double u, double shift) {
  double v = u + shift;
  if (v >= 1.0) v -= 1.0;
  return v;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::vector<Vec3> sample_s2(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DegenerateInput("sample_s2: need at least one point");
  const Shifts sh(seed);
  std::vector<Vec3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t idx = i + 1;  // skip the all-zero first term
    const double u = shifted(radical_inverse(idx, 2), sh.s[0]);
    const double v = shifted(radical_inverse(idx, 3), sh.s[1]);
    const double z = 1.0 - 2.0 * u;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = kTwoPi * v;
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

std::vector<Vec4> sample_s3(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DegenerateInput("sample_s3: need at least one point");
  const Shifts sh(seed);
  std::vector<Vec4> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t idx = i + 1;
    const double u = shifted(radical_inverse(idx, 2), sh.s[0]);
    const double a = shifted(radical_inverse(idx, 3), sh.s[1]);
    const double b = shifted(radical_inverse(idx, 5), sh.s[2]);
    const double r1 = std::sqrt(u);
    const double r2 = std::sqrt(1.0 - u);
    out.emplace_back(r1 * std::cos(kTwoPi * a), r1 * std::sin(kTwoPi * a),
                     r2 * std::cos(kTwoPi * b), r2 * std::sin(kTwoPi * b));
  }
  return out;
}

}  // namespace hopfroots::geom
