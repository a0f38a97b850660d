#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vfam {

/// A lattice point in Z^n, the exponent of a Laurent monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> entries)
      : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<std::int64_t> entries)
      : entries_(entries) {}

  static ExponentVector unit(std::size_t n, std::size_t axis,
                             std::int64_t value = 1);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  std::int64_t total_degree() const noexcept;
  bool is_zero() const noexcept;

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    return a += b;
  }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    return a -= b;
  }
  ExponentVector operator-() const;

  // Plain lexicographic order on the entries.
  friend auto operator<=>(const ExponentVector&,
                          const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&,
                         const ExponentVector&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept;
};

/// Strict weak order placing larger total degree first, then larger
/// lexicographic entries first. This is the canonical column order.
struct GrlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Finite set of same-length exponent vectors. Points are kept sorted in
/// plain lexicographic order without duplicates.
class Support {
 public:
  explicit Support(std::size_t ambient = 0) : ambient_(ambient) {}
  /// Deduplicates. Throws Error(kDimensionMismatch) if a point's length
  /// differs from `ambient`.
  Support(std::size_t ambient, std::vector<ExponentVector> points);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<ExponentVector>& points() const noexcept {
    return points_;
  }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains(const ExponentVector& p) const;
  Support translated(const ExponentVector& v) const;
  Support united(const Support& other) const;
  /// {a - b : a in this, b in other}
  Support minkowski_difference(const Support& other) const;

  /// Points in canonical (graded lexicographic descending) order.
  std::vector<ExponentVector> canonical_order() const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::size_t ambient_;
  std::vector<ExponentVector> points_;
};

}  // namespace vfam
