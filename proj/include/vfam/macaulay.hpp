#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vfam/exponent.hpp"
#include "vfam/polynomial.hpp"
#include "vfam/rational.hpp"

namespace vfam {

/// k x m coefficient matrix of a system over its distinct monomials.
class MacaulayMatrix {
 public:
  /// `entries` is row-major, size rows*cols. When `labels` is empty the
  /// columns are labelled by 1-dimensional points (0), (1), ...
  MacaulayMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries,
                 std::vector<ExponentVector> labels = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<ExponentVector>& labels() const noexcept {
    return labels_;
  }
  /// Column index of a monomial label; Error(kInvalidArgument) when absent.
  std::size_t column_of(const ExponentVector& label) const;

  friend bool operator==(const MacaulayMatrix&,
                         const MacaulayMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
  std::vector<ExponentVector> labels_;
};

struct MinorCounts {
  std::uint64_t total = 0;               // M
  std::uint64_t zero = 0;                // M0
  std::uint64_t nontrivial = 0;          // Mnt
  std::uint64_t nontrivial_zero = 0;     // M0nt

  friend bool operator==(const MinorCounts&, const MinorCounts&) = default;
};

struct ScoreReport {
  MinorCounts counts;
  std::int64_t S = 0;
  std::uint64_t S0 = 0;
  std::uint64_t S0nt = 0;
  Rational R0;
  /// Zero when the matrix has no non-trivial minor.
  Rational R0nt;

  friend bool operator==(const ScoreReport&, const ScoreReport&) = default;
};

struct EnumerationOptions {
  std::uint64_t cap = 10'000'000;
  /// 0 selects the hardware concurrency.
  unsigned threads = 1;
};

/// Same data as minimal_vertical_system, columns in canonical order.
MacaulayMatrix macaulay_matrix(const PolynomialSystem& system);

/// Exact determinant of the rows() x rows() submatrix on `columns`
/// (0-based, strictly increasing).
Rational minor_value(const MacaulayMatrix& mat,
                     std::span<const std::size_t> columns);

/// Whether some bijection rows -> `columns` hits only nonzero entries.
bool minor_is_nontrivial(const MacaulayMatrix& mat,
                         std::span<const std::size_t> columns);

/// Exhaustive tally over all C(m, k) column subsets. Throws
/// Error(kCapExceeded) when C(m, k) > opts.cap and Error(kInvalidArgument)
/// when k > m or k == 0.
MinorCounts minor_counts(const MacaulayMatrix& mat,
                         const EnumerationOptions& opts = {});

ScoreReport score_report_from_counts(const MinorCounts& counts);
ScoreReport score_report(const PolynomialSystem& system,
                         const EnumerationOptions& opts = {});

}  // namespace vfam
