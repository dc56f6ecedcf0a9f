#include "renvol/fit.hpp"

#include <stdexcept>
#include <string>

#include "renvol/errors.hpp"

namespace renvol {

namespace {

BigFloat norm2(const std::vector<BigFloat>& v, mpfr_prec_t prec) {
  BigFloat acc = BigFloat::of(0, prec);
  for (const auto& x : v) acc = acc + x * x;
  return acc.sqrt();
}

}  // namespace

const BigFloat& FitResult::coefficient_of(int power) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == power) return coefficients[i];
  }
  throw std::out_of_range("no fitted coefficient for requested power");
}

FitResult fit_expansion(std::span<const FitSample> samples, unsigned n, mpfr_prec_t precision,
                        bool include_log) {
  const std::size_t rows = samples.size();
  if (rows < n + 4) throw std::invalid_argument("fit_expansion needs at least n + 4 samples");
  const mpfr_prec_t wp = precision + 64;

  std::vector<int> exponents;
  for (int e = -static_cast<int>(n) - 1; e <= 1; ++e) exponents.push_back(e);
  const std::size_t power_cols = exponents.size();
  const std::size_t cols = power_cols + (include_log ? 1 : 0);
  if (rows < cols) throw std::invalid_argument("fit_expansion is underdetermined");

  // Column-major design matrix, then unit-norm scaling per column.
  std::vector<std::vector<BigFloat>> a;
  a.reserve(cols);
  for (std::size_t j = 0; j < power_cols; ++j) {
    std::vector<BigFloat> col;
    col.reserve(rows);
    for (const auto& s : samples) col.push_back(s.eps.to_precision(wp).pow_si(exponents[j]));
    a.push_back(std::move(col));
  }
  if (include_log) {
    std::vector<BigFloat> col;
    col.reserve(rows);
    for (const auto& s : samples) col.push_back(s.eps.to_precision(wp).log());
    a.push_back(std::move(col));
  }
  std::vector<BigFloat> y;
  y.reserve(rows);
  for (const auto& s : samples) y.push_back(s.vol.to_precision(wp));

  std::vector<BigFloat> col_scale;
  for (auto& col : a) {
    BigFloat s = norm2(col, wp);
    if (s.is_zero()) s = BigFloat::of(1, wp);
    for (auto& x : col) x = x / s;
    col_scale.push_back(s);
  }

  // Modified Gram-Schmidt: a is overwritten with Q, r is upper triangular.
  std::vector<std::vector<BigFloat>> r(cols, std::vector<BigFloat>(cols, BigFloat::of(0, wp)));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      BigFloat dot = BigFloat::of(0, wp);
      for (std::size_t k = 0; k < rows; ++k) dot = dot + a[i][k] * a[j][k];
      r[i][j] = dot;
      for (std::size_t k = 0; k < rows; ++k) a[j][k] = a[j][k] - dot * a[i][k];
    }
    r[j][j] = norm2(a[j], wp);
    if (r[j][j].is_zero()) {
      throw numeric_error("fit_expansion: singular design matrix (dependent basis columns)");
    }
    for (std::size_t k = 0; k < rows; ++k) a[j][k] = a[j][k] / r[j][j];
  }

  BigFloat dmax = r[0][0].abs();
  BigFloat dmin = dmax;
  for (std::size_t j = 1; j < cols; ++j) {
    const BigFloat d = r[j][j].abs();
    if (d > dmax) dmax = d;
    if (d < dmin) dmin = d;
  }
  const BigFloat condition = dmax / dmin;
  if (condition > BigFloat::pow2(static_cast<long>(wp) / 2, wp)) {
    throw numeric_error("fit_expansion: condition estimate " + condition.str(6) +
                        " exceeds the precision budget");
  }

  // Back substitution on R c = Qᵀ y.
  std::vector<BigFloat> qty;
  for (std::size_t j = 0; j < cols; ++j) {
    BigFloat dot = BigFloat::of(0, wp);
    for (std::size_t k = 0; k < rows; ++k) dot = dot + a[j][k] * y[k];
    qty.push_back(dot);
  }
  std::vector<BigFloat> c(cols, BigFloat::of(0, wp));
  for (std::size_t jj = cols; jj-- > 0;) {
    BigFloat acc = qty[jj];
    for (std::size_t k = jj + 1; k < cols; ++k) acc = acc - r[jj][k] * c[k];
    c[jj] = acc / r[jj][jj];
  }
  for (std::size_t j = 0; j < cols; ++j) c[j] = c[j] / col_scale[j];

  // Residual against the original (unscaled) basis.
  std::vector<BigFloat> resid = y;
  for (std::size_t k = 0; k < rows; ++k) {
    BigFloat fitval = BigFloat::of(0, wp);
    for (std::size_t j = 0; j < power_cols; ++j) {
      fitval = fitval + c[j] * samples[k].eps.to_precision(wp).pow_si(exponents[j]);
    }
    if (include_log) fitval = fitval + c[power_cols] * samples[k].eps.to_precision(wp).log();
    resid[k] = resid[k] - fitval;
  }

  FitResult out{std::move(exponents),
                {},
                std::nullopt,
                norm2(resid, wp).to_precision(precision),
                condition.to_precision(precision)};
  for (std::size_t j = 0; j < power_cols; ++j) out.coefficients.push_back(c[j].to_precision(precision));
  if (include_log) out.log_coefficient = c[power_cols].to_precision(precision);
  return out;
}

std::vector<BigFloat> default_eps_grid(mpfr_prec_t precision) {
  const mpfr_prec_t wp = precision + 32;
  const BigFloat ten = BigFloat::of(10, wp);
  const BigFloat lten = ten.log();
  std::vector<BigFloat> grid;
  for (int i = 0; i < 12; ++i) {
    // exponents −2 ... −7, evenly spaced in log10
    const BigFloat e = BigFloat::of(-2, wp) - BigFloat::of(5L * i, wp) / BigFloat::of(11, wp);
    grid.push_back((e * lten).exp().to_precision(precision));
  }
  return grid;
}

}  // namespace renvol
