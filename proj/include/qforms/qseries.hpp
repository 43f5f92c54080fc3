#pragma once

#include <string>
#include <vector>

#include "qforms/rational.hpp"

namespace qf {

constexpr long kDefaultPrec = 128;

/// Truncated q-expansion q^{offset24/24} * sum_{n<prec} c_n q^n with exact coefficients.
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(long offset24, std::vector<Rat> coeffs);

  static QExpansion zero(long prec, long offset24 = 0);
  static QExpansion one(long prec);
  static QExpansion from_ints(const std::vector<long>& c, long offset24 = 0);

  long offset24() const { return offset24_; }
  long prec() const { return static_cast<long>(c_.size()); }
  const std::vector<Rat>& coeffs() const { return c_; }
  std::vector<Rat>& coeffs() { return c_; }
  const Rat& operator[](long n) const { return c_[static_cast<size_t>(n)]; }

  bool integer_offset() const { return offset24_ % 24 == 0; }
  /// Integer exponent of index 0; requires an integer offset.
  long start_exponent() const;
  /// Coefficient of q^e for an integer-offset series (0 below the start).
  Rat at(long e) const;
  /// Largest exponent whose coefficient is known.
  long last_exponent() const;

  /// Index of the first nonzero coefficient, prec() if none.
  long valuation() const;
  bool all_integral() const;

  QExpansion truncated(long prec) const;
  /// Re-expresses the series with a smaller offset (same residue mod 24).
  QExpansion realigned(long offset24) const;
  /// Moves the leading zeros into the offset.
  QExpansion normalized() const;

  QExpansion operator-() const;

 private:
  long offset24_ = 0;
  std::vector<Rat> c_;
};

QExpansion series_add(const QExpansion& f, const QExpansion& g);
QExpansion series_sub(const QExpansion& f, const QExpansion& g);
QExpansion series_scale(const QExpansion& f, const Rat& s);
QExpansion series_mul(const QExpansion& f, const QExpansion& g);
QExpansion series_pow(const QExpansion& f, long e);
QExpansion series_inverse(const QExpansion& f);
QExpansion series_div(const QExpansion& f, const QExpansion& g);
QExpansion series_dilate(const QExpansion& f, long d);
/// Multiplies the series by q^{shift24/24}.
QExpansion series_shift(const QExpansion& f, long shift24);
QExpansion project_residue(const QExpansion& f, long r, long m);

/// Linear combination sum s_i f_i.
QExpansion series_lincomb(const std::vector<std::pair<Rat, QExpansion>>& terms);

inline QExpansion operator+(const QExpansion& f, const QExpansion& g) { return series_add(f, g); }
inline QExpansion operator-(const QExpansion& f, const QExpansion& g) { return series_sub(f, g); }
inline QExpansion operator*(const QExpansion& f, const QExpansion& g) { return series_mul(f, g); }
inline QExpansion operator*(const Rat& s, const QExpansion& f) { return series_scale(f, s); }

/// Coefficientwise equality on the common exponent range.
bool agree(const QExpansion& f, const QExpansion& g);

std::string to_json(const QExpansion& f);
QExpansion from_json(const std::string& text);

}  // namespace qf
