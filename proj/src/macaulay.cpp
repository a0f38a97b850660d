#include "vfam/macaulay.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <thread>

#include "vfam/error.hpp"

namespace vfam {

MacaulayMatrix::MacaulayMatrix(std::size_t rows, std::size_t cols,
                               std::vector<Rational> entries,
                               std::vector<ExponentVector> labels)
    : rows_(rows),
      cols_(cols),
      entries_(std::move(entries)),
      labels_(std::move(labels)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix data has " + std::to_string(entries_.size()) +
                    " entries, expected " + std::to_string(rows_ * cols_));
  }
  if (labels_.empty()) {
    labels_.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      labels_.push_back(ExponentVector{static_cast<std::int64_t>(j)});
    }
  }
  if (labels_.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "one label per column required");
  }
  std::vector<ExponentVector> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "column labels must be distinct");
  }
}

std::size_t MacaulayMatrix::column_of(const ExponentVector& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "no column labelled " + label.to_string());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

MacaulayMatrix macaulay_matrix(const PolynomialSystem& system) {
  VerticalSystem v = minimal_vertical_system(system);
  std::vector<Rational> entries;
  entries.reserve(v.rows() * v.cols());
  for (auto& row : v.coeffs) {
    for (auto& c : row) entries.push_back(std::move(c));
  }
  const std::size_t rows = v.rows(), cols = v.cols();
  return MacaulayMatrix(rows, cols, std::move(entries), std::move(v.support));
}

namespace {

// Row i of the matrix multiplied by the lcm of its denominators. Zero
// patterns and determinant zero-ness are unchanged; determinants scale by
// the product of the row factors.
struct IntegerRows {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> big;
  std::vector<std::int64_t> small;  // valid when fits_small
  bool fits_small = true;
  Integer scale_product = 1;

  explicit IntegerRows(const MacaulayMatrix& mat)
      : rows(mat.rows()), cols(mat.cols()) {
    big.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      Integer l = 1;
      for (std::size_t j = 0; j < cols; ++j) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                mat.at(i, j).get_den_mpz_t());
      }
      scale_product *= l;
      for (std::size_t j = 0; j < cols; ++j) {
        const Rational& q = mat.at(i, j);
        big.push_back(Integer(q.get_num() * (l / q.get_den())));
      }
    }
    small.reserve(big.size());
    for (const auto& v : big) {
      if (!v.fits_slong_p()) {
        fits_small = false;
        small.clear();
        break;
      }
      small.push_back(v.get_si());
    }
  }

  bool nonzero(std::size_t i, std::size_t j) const {
    return fits_small ? small[i * cols + j] != 0 : big[i * cols + j] != 0;
  }
};

// Fraction-free Gaussian elimination on a dense n x n matrix (row-major).
Integer bareiss(std::vector<Integer> a, std::size_t n) {
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  return n == 0 ? Integer(1) : Integer(sign * a[n * n - 1]);
}

// Same elimination in machine integers. Every intermediate entry is a minor
// of the input; returns nullopt as soon as one leaves the int64 range.
std::optional<std::int64_t> bareiss_small(std::vector<std::int64_t> a,
                                          std::size_t n) {
  using wide = __int128;
  constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const wide t1 = static_cast<wide>(a[i * n + j]) * a[k * n + k];
        const wide t2 = static_cast<wide>(a[i * n + k]) * a[k * n + j];
        // |t1|, |t2| < 2^126, so the difference cannot overflow.
        const wide q = (t1 - t2) / prev;
        if (q > kMax || q < -kMax) return std::nullopt;
        a[i * n + j] = static_cast<std::int64_t>(q);
      }
    }
    prev = a[k * n + k];
  }
  if (n == 0) return 1;
  return sign * a[n * n - 1];
}

bool determinant_is_zero(const IntegerRows& m,
                         std::span<const std::size_t> columns) {
  const std::size_t k = m.rows;
  if (m.fits_small) {
    std::vector<std::int64_t> a(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        a[i * k + j] = m.small[i * m.cols + columns[j]];
      }
    }
    if (auto d = bareiss_small(std::move(a), k)) return *d == 0;
  }
  std::vector<Integer> a(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      a[i * k + j] = m.big[i * m.cols + columns[j]];
    }
  }
  return bareiss(std::move(a), k) == 0;
}

// Kuhn's augmenting-path matching of rows to the selected columns.
class Matcher {
 public:
  explicit Matcher(std::size_t k) : k_(k), match_col_(k), seen_(k) {}

  bool perfect(const IntegerRows& m, std::span<const std::size_t> columns) {
    std::fill(match_col_.begin(), match_col_.end(), kNone);
    for (std::size_t row = 0; row < k_; ++row) {
      std::fill(seen_.begin(), seen_.end(), false);
      if (!augment(m, columns, row)) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(const IntegerRows& m, std::span<const std::size_t> columns,
               std::size_t row) {
    for (std::size_t c = 0; c < k_; ++c) {
      if (seen_[c] || !m.nonzero(row, columns[c])) continue;
      seen_[c] = true;
      if (match_col_[c] == kNone || augment(m, columns, match_col_[c])) {
        match_col_[c] = row;
        return true;
      }
    }
    return false;
  }

  std::size_t k_;
  std::vector<std::size_t> match_col_;
  std::vector<bool> seen_;
};

void check_columns(const MacaulayMatrix& mat,
                   std::span<const std::size_t> columns) {
  if (columns.size() != mat.rows()) {
    throw Error(ErrorCode::kInvalidArgument,
                "minor needs " + std::to_string(mat.rows()) +
                    " columns, got " + std::to_string(columns.size()));
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] >= mat.cols()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "column index " + std::to_string(columns[i]) +
                      " out of range");
    }
    if (i > 0 && columns[i] <= columns[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "column indices must be strictly increasing");
    }
  }
}

// Lexicographic combination of rank `r` among the k-subsets of [0, m).
std::vector<std::size_t> unrank(std::uint64_t r, std::size_t m, std::size_t k) {
  std::vector<std::size_t> c(k);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      // Subsets starting with `next` at position i.
      const std::uint64_t block = binomial(m - next - 1, k - i - 1).get_ui();
      if (r < block) break;
      r -= block;
      ++next;
    }
    c[i] = next++;
  }
  return c;
}

bool advance(std::vector<std::size_t>& c, std::size_t m) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == m - k + (i - 1)) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

MinorCounts tally_range(const IntegerRows& m, std::uint64_t begin,
                        std::uint64_t end) {
  MinorCounts counts;
  if (begin >= end) return counts;
  Matcher matcher(m.rows);
  std::vector<std::size_t> c = unrank(begin, m.cols, m.rows);
  for (std::uint64_t r = begin; r < end; ++r) {
    const bool nontrivial = matcher.perfect(m, c);
    const bool zero = determinant_is_zero(m, c);
    ++counts.total;
    if (zero) ++counts.zero;
    if (nontrivial) {
      ++counts.nontrivial;
      if (zero) ++counts.nontrivial_zero;
    }
    advance(c, m.cols);
  }
  return counts;
}

}  // namespace

Rational minor_value(const MacaulayMatrix& mat,
                     std::span<const std::size_t> columns) {
  check_columns(mat, columns);
  const IntegerRows m(mat);
  const std::size_t k = mat.rows();
  std::vector<Integer> a(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i * k + j] = m.big[i * m.cols + columns[j]];
  }
  Rational det(bareiss(std::move(a), k), m.scale_product);
  det.canonicalize();
  return det;
}

bool minor_is_nontrivial(const MacaulayMatrix& mat,
                         std::span<const std::size_t> columns) {
  check_columns(mat, columns);
  const IntegerRows m(mat);
  return Matcher(mat.rows()).perfect(m, columns);
}

MinorCounts minor_counts(const MacaulayMatrix& mat,
                         const EnumerationOptions& opts) {
  const std::size_t k = mat.rows(), n = mat.cols();
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "matrix has no rows");
  if (k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "more rows (" + std::to_string(k) + ") than columns (" +
                    std::to_string(n) + "); no maximal minors");
  }
  const Integer total = binomial(n, k);
  if (total > Integer(std::to_string(opts.cap))) {
    throw Error(ErrorCode::kCapExceeded,
                "C(" + std::to_string(n) + "," + std::to_string(k) +
                    ") = " + total.get_str() + " minors exceed the cap of " +
                    std::to_string(opts.cap));
  }
  const std::uint64_t count = total.get_ui();
  const IntegerRows m(mat);

  unsigned threads = opts.threads ? opts.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
  if (count < 4096) threads = 1;
  if (threads == 1) return tally_range(m, 0, count);

  std::vector<MinorCounts> partial(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = count * t / threads;
    const std::uint64_t end = count * (t + 1) / threads;
    pool.emplace_back([&, t, begin, end] { partial[t] = tally_range(m, begin, end); });
  }
  for (auto& th : pool) th.join();
  MinorCounts sum;
  for (const auto& p : partial) {
    sum.total += p.total;
    sum.zero += p.zero;
    sum.nontrivial += p.nontrivial;
    sum.nontrivial_zero += p.nontrivial_zero;
  }
  return sum;
}

ScoreReport score_report_from_counts(const MinorCounts& counts) {
  ScoreReport r;
  r.counts = counts;
  r.S = -static_cast<std::int64_t>(counts.total);
  r.S0 = counts.zero;
  r.S0nt = counts.nontrivial_zero;
  r.R0 = counts.total ? Rational(Integer(std::to_string(counts.zero)),
                                 Integer(std::to_string(counts.total)))
                      : Rational(0);
  r.R0nt = counts.nontrivial
               ? Rational(Integer(std::to_string(counts.nontrivial_zero)),
                          Integer(std::to_string(counts.nontrivial)))
               : Rational(0);
  r.R0.canonicalize();
  r.R0nt.canonicalize();
  return r;
}

ScoreReport score_report(const PolynomialSystem& system,
                         const EnumerationOptions& opts) {
  return score_report_from_counts(minor_counts(macaulay_matrix(system), opts));
}

}  // namespace vfam
