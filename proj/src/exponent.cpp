#include "vfam/exponent.hpp"

#include <algorithm>
#include <numeric>

#include "vfam/error.hpp"

namespace vfam {

namespace {

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "exponent vectors of length " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
  }
}

}  // namespace

ExponentVector ExponentVector::unit(std::size_t n, std::size_t axis,
                                    std::int64_t value) {
  ExponentVector e(n);
  e.entries_.at(axis) = value;
  return e;
}

std::int64_t ExponentVector::total_degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](std::int64_t v) { return v == 0; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other[i];
  return *this;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector r(*this);
  for (auto& v : r.entries_) v = -v;
  return r;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::size_t ExponentHash::operator()(const ExponentVector& e) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ e.size();
  for (std::int64_t v : e.entries()) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool GrlexDescending::operator()(const ExponentVector& a,
                                 const ExponentVector& b) const {
  const auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a > b;
}

Support::Support(std::size_t ambient, std::vector<ExponentVector> points)
    : ambient_(ambient), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.size() != ambient_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "point " + p.to_string() + " in a support of dimension " +
                      std::to_string(ambient_));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Support::contains(const ExponentVector& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Support Support::translated(const ExponentVector& v) const {
  Support r(ambient_);
  r.points_.reserve(points_.size());
  for (const auto& p : points_) r.points_.push_back(p + v);
  // Translation preserves lexicographic order.
  return r;
}

Support Support::united(const Support& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "union of supports of different dimension");
  }
  Support r(ambient_);
  std::set_union(points_.begin(), points_.end(), other.points_.begin(),
                 other.points_.end(), std::back_inserter(r.points_));
  return r;
}

Support Support::minkowski_difference(const Support& other) const {
  std::vector<ExponentVector> diffs;
  diffs.reserve(points_.size() * other.points_.size());
  for (const auto& a : points_) {
    for (const auto& b : other.points_) diffs.push_back(a - b);
  }
  return Support(ambient_, std::move(diffs));
}

std::vector<ExponentVector> Support::canonical_order() const {
  std::vector<ExponentVector> r = points_;
  std::sort(r.begin(), r.end(), GrlexDescending{});
  return r;
}

}  // namespace vfam
