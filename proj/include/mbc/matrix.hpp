#pragma once

// OBR countdown matrices. Entry (i, j) is the smallest budget ratio b1/b2
// with which P1 is guaranteed to collect i more value before P2 collects j.
//
//   Set01  + first-price  -> M   (upper triangular)
//   Set01  + all-pay(a)   -> N   (upper triangular, any a in [0,1])
//   Fixed1 + first-price  -> L   (full grid)
//   Fixed1 + all-pay(a)   -> Q   (full grid; a outside {0,1} is an extension)

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbc/contest.hpp"
#include "mbc/ratio.hpp"

namespace mbc {

enum class MatrixDomain { UpperTriangular, FullGrid };

template <ContestNumber Num>
class CountdownMatrix {
 public:
  CountdownMatrix(AuctionVariant variant, int n);

  const AuctionVariant& variant() const { return variant_; }
  int size() const { return n_; }
  MatrixDomain domain() const {
    return variant_.is_set01() ? MatrixDomain::UpperTriangular : MatrixDomain::FullGrid;
  }
  /// Fixed-value all-pay with alpha strictly between 0 and 1 has no
  /// published recurrence; it is filled by the same indifference rule.
  bool is_extension() const;

  /// True for finite entries, including the virtual row i = 0.
  bool defined(int i, int j) const;

  /// 0 <= i <= n, 1 <= j <= n; throws DomainError outside that range.
  Ratio<Num> at(int i, int j) const;

  /// Finite entry; throws UnwinnableError on the sentinel.
  const Num& value(int i, int j) const;

  /// Number of finite entries with i >= 1.
  std::size_t defined_count() const;

  /// Main diagonal entry (k, k).
  const Num& diagonal(int k) const { return value(k, k); }

 private:
  void check_range(int i, int j) const;
  Num& cell(int i, int j) { return cells_[index(i, j)]; }
  const Num& cell(int i, int j) const { return cells_[index(i, j)]; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(j);
  }

  AuctionVariant variant_;
  int n_;
  std::vector<Num> cells_;

  template <ContestNumber N>
  friend CountdownMatrix<N> build_matrix(const AuctionVariant&, int);
};

/// Fills the matrix by dynamic programming in O(n^2).
template <ContestNumber Num>
CountdownMatrix<Num> build_matrix(const AuctionVariant& variant, int n);

/// Closed-form entry. Throws NoClosedFormError for all-pay with alpha
/// outside {0, 1}; alpha = 0 reduces to the first-price form.
template <ContestNumber Num>
Ratio<Num> closed_form(const AuctionVariant& variant, int i, int j);

bool has_closed_form(const AuctionVariant& variant);

/// OBR of a fresh T-turn game: entry (ceil(T/2), ceil(T/2)).
template <ContestNumber Num>
Ratio<Num> obr(const AuctionVariant& variant, int turns);

/// OBR for keeping the final deficit S2 - S1 at most k:
/// entry (ceil((T-k)/2), ceil((T+k)/2)), or 0 once P1 needs nothing.
template <ContestNumber Num>
Ratio<Num> handicap_obr(const AuctionVariant& variant, int turns, int k);

struct MatrixMismatch {
  int i = 0;
  int j = 0;
  std::string dp;
  std::string closed;
};

struct VerifyReport {
  bool ok = true;
  std::size_t entries_checked = 0;
  std::optional<MatrixMismatch> mismatch;
};

/// Exact-mode comparison of the DP against the closed form on every
/// finite entry with 1 <= i, j <= n.
VerifyReport verify_matrix(const AuctionVariant& variant, int n);

/// Header "i\j,1,...,n"; one row per i in 1..n; "inf" for the sentinel.
/// Exact cells print as "p/q", float cells with 17 significant digits.
template <ContestNumber Num>
std::string to_csv(const CountdownMatrix<Num>& m);

/// {"variant":..,"alpha":..,"n":..,"entries":[[...]]} with rows i = 1..n;
/// float mode emits numbers, exact mode "p/q" strings; the sentinel is "inf".
template <ContestNumber Num>
std::string to_json(const CountdownMatrix<Num>& m);

extern template class CountdownMatrix<Exact>;
extern template class CountdownMatrix<double>;

}  // namespace mbc
