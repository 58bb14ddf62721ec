#include "bicell/yseries.hpp"

#include "bicell/error.hpp"

namespace bicell {

namespace {
const RatPoly kZero;
}

YSeries::YSeries(int degree) {
  if (degree < 0) throw InvalidInput("series truncation must be non-negative");
  coeffs_.resize(degree + 1);
}

YSeries::YSeries(int degree, std::vector<RatPoly> coeffs) : YSeries(degree) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

const RatPoly& YSeries::coeff(int k) const {
  if (k < 0 || k > truncation()) return kZero;
  return coeffs_[k];
}

RatPoly& YSeries::coeff(int k) {
  if (k < 0 || k > truncation()) throw InvalidInput("series coefficient index out of range");
  return coeffs_[k];
}

YSeries& YSeries::operator+=(const YSeries& other) {
  if (other.truncation() != truncation()) throw InvalidInput("series truncations differ");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

YSeries& YSeries::operator*=(const YSeries& other) {
  if (other.truncation() != truncation()) throw InvalidInput("series truncations differ");
  const int d = truncation();
  std::vector<RatPoly> out(d + 1);
  for (int i = 0; i <= d; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= d; ++j) {
      if (other.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

YSeries& YSeries::operator*=(const RatPoly& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

}  // namespace bicell
