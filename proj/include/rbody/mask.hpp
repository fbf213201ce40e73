#pragma once

// Binary masks on a uniform pixel lattice. Pixel (ix, iy) stands for the
// point origin + spacing·(ix, iy); a mask denotes the set of its foreground
// pixel centers.

#include <cstdint>
#include <vector>

#include "rbody/geom.hpp"

namespace rbody {

struct Lattice {
  int width = 0;
  int height = 0;
  Point2 origin{};
  double spacing = 1.0;

  std::size_t size() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  bool inside(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
  Point2 center(int x, int y) const { return origin + spacing * Point2{double(x), double(y)}; }
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, Point2 origin = {}, double spacing = 1.0);
  explicit BinaryMask(const Lattice& lattice);

  const Lattice& lattice() const { return lat_; }
  int width() const { return lat_.width; }
  int height() const { return lat_.height; }
  double spacing() const { return lat_.spacing; }
  Point2 origin() const { return lat_.origin; }

  bool at(int x, int y) const { return bits_[lat_.index(x, y)] != 0; }
  /// Out-of-window pixels read as background.
  bool get(int x, int y) const { return lat_.inside(x, y) && at(x, y); }
  void set(int x, int y, bool v = true) { bits_[lat_.index(x, y)] = v ? 1 : 0; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::vector<std::uint8_t>& bits() { return bits_; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  /// True when some foreground pixel lies on the lattice edge.
  bool touches_window() const;

  BinaryMask complement() const;
  BinaryMask operator&(const BinaryMask& o) const;
  BinaryMask operator|(const BinaryMask& o) const;
  /// Pixels of *this not in o.
  BinaryMask minus(const BinaryMask& o) const;
  bool subset_of(const BinaryMask& o) const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  void require_same(const BinaryMask& o) const;

  Lattice lat_;
  std::vector<std::uint8_t> bits_;
};

/// Exact squared distances (units of spacing²) to the nearest foreground pixel center.
class SqDistField {
 public:
  SqDistField() = default;
  explicit SqDistField(const Lattice& lattice) : lat_(lattice), d2_(lattice.size(), 0) {}

  const Lattice& lattice() const { return lat_; }
  std::int64_t at(int x, int y) const { return d2_[lat_.index(x, y)]; }
  std::int64_t& ref(int x, int y) { return d2_[lat_.index(x, y)]; }
  const std::vector<std::int64_t>& values() const { return d2_; }
  std::vector<std::int64_t>& values() { return d2_; }

 private:
  Lattice lat_;
  std::vector<std::int64_t> d2_;
};

/// A radius measured in pixel units.
class RadiusPx {
 public:
  explicit RadiusPx(double r);
  double value() const { return r_; }
  double squared() const { return r_ * r_; }
  RadiusPx scaled(double s) const { return RadiusPx(r_ * s); }

 private:
  double r_;
};

}  // namespace rbody
