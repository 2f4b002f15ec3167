#include "nkwb/random.hpp"

namespace nkwb {

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection sampling keeps the distribution uniform
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Scalar Rng::scalar(Field f, long long range) {
  switch (f->kind) {
    case FieldKind::Rational:
      return Scalar::from_int(f, static_cast<long long>(below(2 * static_cast<std::uint64_t>(range) + 1)) - range);
    case FieldKind::Prime: return Scalar::from_int(f, static_cast<long long>(below(f->p)));
    case FieldKind::Extension: {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i + 1 < f->minpoly.size(); ++i) c.push_back(scalar(f->base, range));
      return Scalar::from_coeffs(f, c);
    }
  }
  return Scalar::zero(f);
}

Matrix Rng::combination(const Matrix& columns, long long range) {
  Field f = columns.field();
  Matrix out(f, columns.rows(), 1);
  if (columns.cols() == 0) return out;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix coeff(f, columns.cols(), 1);
    for (std::size_t i = 0; i < columns.cols(); ++i) coeff(i, 0) = scalar(f, range);
    out = columns * coeff;
    if (!out.is_zero()) return out;
  }
  return columns.col(0);
}

}  // namespace nkwb
