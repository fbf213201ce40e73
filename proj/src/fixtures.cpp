#include "rbody/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rbody::fixtures {

namespace {

template <typename Pred>
BinaryMask paint(int w, int h, Pred in) {
  BinaryMask m(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (in(double(x), double(y))) m.set(x, y);
    }
  }
  return m;
}

double seg_dist(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double t = std::clamp(dot(p - a, ab) / std::max(dot(ab, ab), 1e-300), 0.0, 1.0);
  return dist(p, a + t * ab);
}

}  // namespace

BinaryMask disk(int w, int h, Point2 c, double r) {
  return paint(w, h, [&](double x, double y) { return dist({x, y}, c) <= r; });
}

BinaryMask filled_square(int w, int h, Point2 corner, int side) {
  return paint(w, h, [&](double x, double y) {
    return x >= corner.x && y >= corner.y && x < corner.x + side && y < corner.y + side;
  });
}

BinaryMask stadium(int w, int h, Point2 c, double length, double cap) {
  Point2 a = c - Point2{0.5 * length, 0.0};
  Point2 b = c + Point2{0.5 * length, 0.0};
  return paint(w, h, [&](double x, double y) { return seg_dist({x, y}, a, b) <= cap; });
}

BinaryMask dumbbell(int w, int h, Point2 left, Point2 right, double r, double bar) {
  return paint(w, h, [&](double x, double y) {
    Point2 p{x, y};
    if (dist(p, left) <= r || dist(p, right) <= r) return true;
    return x >= left.x && x <= right.x && std::abs(y - left.y) <= 0.5 * bar;
  });
}

BinaryMask pixels(int w, int h, const std::vector<std::pair<int, int>>& pts) {
  BinaryMask m(w, h);
  for (auto [x, y] : pts) {
    if (!m.lattice().inside(x, y)) throw InputError("fixture pixel outside window");
    m.set(x, y);
  }
  return m;
}

BinaryMask triangle_vertices(int w, int h, Point2 c, double rc) {
  std::vector<std::pair<int, int>> pts;
  for (int k = 0; k < 3; ++k) {
    double phi = kPi / 2.0 + k * kTwoPi / 3.0;
    pts.emplace_back(int(std::lround(c.x + rc * std::cos(phi))), int(std::lround(c.y + rc * std::sin(phi))));
  }
  return pixels(w, h, pts);
}

BinaryMask square_outline(int w, int h, Point2 c, double rc) {
  int half = int(std::floor(rc / std::sqrt(2.0)));
  int cx = int(std::lround(c.x));
  int cy = int(std::lround(c.y));
  BinaryMask m(w, h);
  for (int t = -half; t <= half; ++t) {
    m.set(cx + t, cy - half);
    m.set(cx + t, cy + half);
    m.set(cx - half, cy + t);
    m.set(cx + half, cy + t);
  }
  return m;
}

BinaryMask blob(int w, int h, std::uint64_t seed, int margin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(margin + 12.0, w - margin - 12.0);
  std::uniform_real_distribution<double> uy(margin + 12.0, h - margin - 12.0);
  std::uniform_real_distribution<double> us(6.0, 16.0);
  std::uniform_int_distribution<int> un(3, 7);
  struct Bump {
    Point2 c;
    double s;
  };
  std::vector<Bump> bumps(static_cast<std::size_t>(un(rng)));
  for (auto& b : bumps) b = {{ux(rng), uy(rng)}, us(rng)};
  BinaryMask m = paint(w, h, [&](double x, double y) {
    if (x < margin || y < margin || x >= w - margin || y >= h - margin) return false;
    double f = 0.0;
    for (const auto& b : bumps) {
      double d2 = (x - b.c.x) * (x - b.c.x) + (y - b.c.y) * (y - b.c.y);
      f += std::exp(-d2 / (2.0 * b.s * b.s));
    }
    return f > 0.5;
  });
  if (m.empty()) m.set(w / 2, h / 2);
  return m;
}

std::vector<BinaryMask> blob_corpus(int count, int size, std::uint64_t seed, int margin) {
  std::vector<BinaryMask> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(blob(size, size, seed + 7919u * std::uint64_t(i), margin));
  return out;
}

std::vector<BinaryMask> standard_corpus() {
  return blob_corpus(kCorpusCount, kCorpusSize, kCorpusSeed, kCorpusMargin);
}

}  // namespace rbody::fixtures
