#include "rbody/mask.hpp"

#include <algorithm>
#include <numeric>

#include "rbody/report.hpp"

namespace rbody {

bool CheckReport::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

void CheckReport::add_flag(const std::string& f) {
  if (!has_flag(f)) flags.push_back(f);
}

BinaryMask::BinaryMask(int width, int height, Point2 origin, double spacing)
    : BinaryMask(Lattice{width, height, origin, spacing}) {}

BinaryMask::BinaryMask(const Lattice& lattice) : lat_(lattice) {
  if (lat_.width <= 0 || lat_.height <= 0) throw InputError("mask dimensions must be positive");
  if (!(lat_.spacing > 0.0)) throw InputError("mask spacing must be positive");
  bits_.assign(lat_.size(), 0);
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(), [](auto b) { return b != 0; }));
}

bool BinaryMask::touches_window() const {
  for (int x = 0; x < width(); ++x) {
    if (at(x, 0) || at(x, height() - 1)) return true;
  }
  for (int y = 0; y < height(); ++y) {
    if (at(0, y) || at(width() - 1, y)) return true;
  }
  return false;
}

void BinaryMask::require_same(const BinaryMask& o) const {
  if (!(lat_ == o.lat_)) throw InputError("inconsistent lattice headers");
}

BinaryMask BinaryMask::complement() const {
  BinaryMask r(lat_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] ? 0 : 1;
  return r;
}

BinaryMask BinaryMask::operator&(const BinaryMask& o) const {
  require_same(o);
  BinaryMask r(lat_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = (bits_[i] && o.bits_[i]) ? 1 : 0;
  return r;
}

BinaryMask BinaryMask::operator|(const BinaryMask& o) const {
  require_same(o);
  BinaryMask r(lat_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = (bits_[i] || o.bits_[i]) ? 1 : 0;
  return r;
}

BinaryMask BinaryMask::minus(const BinaryMask& o) const {
  require_same(o);
  BinaryMask r(lat_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = (bits_[i] && !o.bits_[i]) ? 1 : 0;
  return r;
}

bool BinaryMask::subset_of(const BinaryMask& o) const {
  require_same(o);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !o.bits_[i]) return false;
  }
  return true;
}

RadiusPx::RadiusPx(double r) : r_(r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InputError("radius must be positive");
}

}  // namespace rbody
