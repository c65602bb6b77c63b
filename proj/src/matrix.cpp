#include "mbc/matrix.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mbc {

template <ContestNumber Num>
CountdownMatrix<Num>::CountdownMatrix(AuctionVariant variant, int n)
    : variant_(std::move(variant)), n_(n) {
  if (n < 1) throw EmptyMatrixError();
  cells_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1),
                from_int<Num>(0));
}

template <ContestNumber Num>
bool CountdownMatrix<Num>::is_extension() const {
  const Exact& a = variant_.loser_rate();
  return !variant_.is_set01() && variant_.is_all_pay() && a != 0 && a != 1;
}

template <ContestNumber Num>
void CountdownMatrix<Num>::check_range(int i, int j) const {
  if (i < 0 || i > n_ || j < 1 || j > n_)
    throw DomainError("countdown (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") outside matrix of size " + std::to_string(n_));
}

template <ContestNumber Num>
bool CountdownMatrix<Num>::defined(int i, int j) const {
  check_range(i, j);
  return domain() == MatrixDomain::FullGrid || i <= j;
}

template <ContestNumber Num>
Ratio<Num> CountdownMatrix<Num>::at(int i, int j) const {
  if (!defined(i, j)) return Ratio<Num>::unwinnable();
  return Ratio<Num>(cell(i, j));
}

template <ContestNumber Num>
const Num& CountdownMatrix<Num>::value(int i, int j) const {
  if (!defined(i, j))
    throw UnwinnableError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") is unwinnable");
  return cell(i, j);
}

template <ContestNumber Num>
std::size_t CountdownMatrix<Num>::defined_count() const {
  const auto n = static_cast<std::size_t>(n_);
  return domain() == MatrixDomain::FullGrid ? n * n : n * (n + 1) / 2;
}

template <ContestNumber Num>
CountdownMatrix<Num> build_matrix(const AuctionVariant& variant, int n) {
  if (n < 1) throw EmptyMatrixError();
  variant.validate();
  CountdownMatrix<Num> m(variant, n);
  const Num one = from_int<Num>(1);
  const Num alpha = from_exact<Num>(variant.loser_rate());

  // Row 0 is the virtual "already won" row and stays 0.
  if (variant.is_set01()) {
    if (!variant.is_all_pay()) {
      for (int j = 1; j <= n; ++j) m.cell(1, j) = from_int<Num>(1, j);
      for (int i = 2; i <= n; ++i) {
        m.cell(i, i) = one + m.cell(i - 1, i);
        for (int j = i + 1; j <= n; ++j) {
          const Num& a = m.cell(i, j - 1);
          const Num& b = m.cell(i - 1, j);
          m.cell(i, j) = a * (one + b) / (one + a);
        }
      }
    } else {
      for (int i = 1; i <= n; ++i) {
        m.cell(i, i) = one + m.cell(i - 1, i);
        for (int j = i + 1; j <= n; ++j) {
          const Num& a = m.cell(i, j - 1);
          const Num& b = m.cell(i - 1, j);
          m.cell(i, j) = (a * b + a - alpha * b) / (a + (one - alpha));
        }
      }
    }
    return m;
  }

  for (int i = 1; i <= n; ++i) m.cell(i, 1) = from_int<Num>(i);
  if (!variant.is_all_pay()) {
    for (int j = 2; j <= n; ++j) m.cell(1, j) = from_int<Num>(1, j);
    for (int i = 2; i <= n; ++i) {
      for (int j = 2; j <= n; ++j) {
        const Num& a = m.cell(i, j - 1);
        const Num& b = m.cell(i - 1, j);
        m.cell(i, j) = a * (one + b) / (one + a);
      }
    }
  } else if (variant.loser_rate() == 1) {
    for (int j = 2; j <= n; ++j) m.cell(1, j) = one;
    for (int i = 2; i <= n; ++i) {
      for (int j = 2; j <= n; ++j) {
        const Num& a = m.cell(i, j - 1);
        const Num& b = m.cell(i - 1, j);
        m.cell(i, j) = one - b / a + b;
      }
    }
  } else {
    // Indifference between winning (r + q[i-1][j]) and losing
    // (alpha r + (1 - r) q[i][j-1]), with q[0][j] = 0.
    for (int i = 1; i <= n; ++i) {
      for (int j = 2; j <= n; ++j) {
        const Num& a = m.cell(i, j - 1);
        const Num& b = m.cell(i - 1, j);
        const Num r = (a - b) / (one - alpha + a);
        m.cell(i, j) = r + b;
      }
    }
  }
  return m;
}

bool has_closed_form(const AuctionVariant& variant) {
  const Exact& a = variant.loser_rate();
  return a == 0 || a == 1;
}

template <ContestNumber Num>
Ratio<Num> closed_form(const AuctionVariant& variant, int i, int j) {
  variant.validate();
  if (i < 1 || j < 1) throw DomainError("closed form needs i >= 1 and j >= 1");
  if (!has_closed_form(variant))
    throw NoClosedFormError("no closed form for all-pay ratio " +
                            format_exact(variant.loser_rate()) + "; use the DP");
  const bool pay_all = variant.loser_rate() == 1;
  const std::int64_t I = i;
  const std::int64_t J = j;
  if (variant.is_set01()) {
    if (i > j) return Ratio<Num>::unwinnable();
    if (!pay_all) return Ratio<Num>(from_int<Num>(I * (J - I + 3), (J - I + 1) * (J + 2)));
    return Ratio<Num>(from_int<Num>(1) +
                      from_int<Num>((I - 1) * (J - I + 3), (J - I + 1) * (J + 1)));
  }
  if (!pay_all) return Ratio<Num>(from_int<Num>(I, J));
  return Ratio<Num>(from_int<Num>(I + J - 1, J));
}

template <ContestNumber Num>
Ratio<Num> obr(const AuctionVariant& variant, int turns) {
  if (turns < 1) throw DomainError("turn count must be at least 1");
  const int n = ceil_half(turns);
  if (has_closed_form(variant)) return closed_form<Num>(variant, n, n);
  return Ratio<Num>(build_matrix<Num>(variant, n).diagonal(n));
}

template <ContestNumber Num>
Ratio<Num> handicap_obr(const AuctionVariant& variant, int turns, int k) {
  if (turns < 1) throw DomainError("turn count must be at least 1");
  if (k < 0) throw DomainError("handicap must be nonnegative");
  const int i = ceil_half(turns - k);
  const int j = ceil_half(turns + k);
  if (i <= 0) return Ratio<Num>(from_int<Num>(0));
  if (has_closed_form(variant)) return closed_form<Num>(variant, i, j);
  return build_matrix<Num>(variant, std::max(i, j)).at(i, j);
}

VerifyReport verify_matrix(const AuctionVariant& variant, int n) {
  if (!has_closed_form(variant))
    throw NoClosedFormError("no closed form for all-pay ratio " +
                            format_exact(variant.loser_rate()));
  const auto m = build_matrix<Exact>(variant, n);
  VerifyReport report;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!m.defined(i, j)) continue;
      const Ratio<Exact> expected = closed_form<Exact>(variant, i, j);
      ++report.entries_checked;
      if (m.at(i, j) != expected) {
        report.ok = false;
        report.mismatch = MatrixMismatch{i, j, m.at(i, j).to_string(), expected.to_string()};
        return report;
      }
    }
  }
  return report;
}

namespace {

std::string csv_cell(const Ratio<Exact>& r) {
  return r.is_unwinnable() ? "inf" : format_exact(r.value());
}

std::string csv_cell(const Ratio<double>& r) {
  return r.is_unwinnable() ? "inf" : format_17g(r.value());
}

nlohmann::json json_cell(const Ratio<Exact>& r) {
  return r.is_unwinnable() ? nlohmann::json("inf") : nlohmann::json(format_exact(r.value()));
}

nlohmann::json json_cell(const Ratio<double>& r) {
  return r.is_unwinnable() ? nlohmann::json("inf") : nlohmann::json(r.value());
}

}  // namespace

template <ContestNumber Num>
std::string to_csv(const CountdownMatrix<Num>& m) {
  std::ostringstream out;
  out << "i\\j";
  for (int j = 1; j <= m.size(); ++j) out << ',' << j;
  out << '\n';
  for (int i = 1; i <= m.size(); ++i) {
    out << i;
    for (int j = 1; j <= m.size(); ++j) out << ',' << csv_cell(m.at(i, j));
    out << '\n';
  }
  return out.str();
}

template <ContestNumber Num>
std::string to_json(const CountdownMatrix<Num>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(json_cell(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["variant"] = m.variant().name();
  doc["alpha"] = to_double(m.variant().loser_rate());
  doc["n"] = m.size();
  doc["entries"] = std::move(rows);
  return doc.dump();
}

template class CountdownMatrix<Exact>;
template class CountdownMatrix<double>;

#define MBC_INSTANTIATE(Num)                                                    \
  template CountdownMatrix<Num> build_matrix<Num>(const AuctionVariant&, int);  \
  template Ratio<Num> closed_form<Num>(const AuctionVariant&, int, int);        \
  template Ratio<Num> obr<Num>(const AuctionVariant&, int);                     \
  template Ratio<Num> handicap_obr<Num>(const AuctionVariant&, int, int);       \
  template std::string to_csv<Num>(const CountdownMatrix<Num>&);                \
  template std::string to_json<Num>(const CountdownMatrix<Num>&);

MBC_INSTANTIATE(Exact)
MBC_INSTANTIATE(double)

#undef MBC_INSTANTIATE

}  // namespace mbc
