#include "nkwb/hopf.hpp"

namespace nkwb {

HopfAlgebra::HopfAlgebra(CoalgebraPtr coalgebra, Matrix mult, Matrix unit, Matrix antipode)
    : coalgebra_(std::move(coalgebra)),
      algebra_(coalgebra_->field(), std::move(mult), std::move(unit)),
      antipode_(std::move(antipode)),
      antipode_inverse_(std::make_shared<std::optional<Matrix>>()),
      antipode_once_(std::make_shared<std::once_flag>()) {
  if (algebra_.dim() != coalgebra_->dim() || antipode_.rows() != algebra_.dim() || antipode_.cols() != algebra_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "Hopf algebra structure maps have inconsistent sizes");
  }
}

const Matrix& HopfAlgebra::antipode_inverse() const {
  std::call_once(*antipode_once_, [&] { *antipode_inverse_ = try_inverse(antipode_); });
  if (!*antipode_inverse_) throw Error(ErrorKind::InvalidStructure, "antipode is not invertible");
  return **antipode_inverse_;
}

bool HopfReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

// Product in H (x) H: (a (x) b)(c (x) d) = ac (x) bd.
Matrix tensor_square_product(const HopfAlgebra& h, const Matrix& x, const Matrix& y) {
  std::size_t n = h.dim();
  Field f = h.field();
  Matrix out(f, n * n, 1);
  const Matrix& m = h.mult();
  for (std::size_t p = 0; p < n * n; ++p) {
    if (x(p, 0).is_zero()) continue;
    std::size_t a = p / n, b = p % n;
    for (std::size_t q = 0; q < n * n; ++q) {
      if (y(q, 0).is_zero()) continue;
      std::size_t c = q / n, d = q % n;
      Scalar coeff = x(p, 0) * y(q, 0);
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& left = m(r, a * n + c);
        if (left.is_zero()) continue;
        for (std::size_t s = 0; s < n; ++s) {
          const Scalar& right = m(s, b * n + d);
          if (!right.is_zero()) out(r * n + s, 0) += coeff * left * right;
        }
      }
    }
  }
  return out;
}

std::size_t matrix_order(const Matrix& m, std::size_t bound) {
  Matrix p = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

}  // namespace

HopfReport check_hopf(const HopfAlgebra& h) {
  HopfReport rep;
  const Coalgebra& c = *h.coalgebra();
  Field f = h.field();
  std::size_t n = h.dim();
  CoalgebraReport cr = check_coalgebra(c);
  rep.checks.push_back(cr.coassociativity);
  rep.checks.push_back(cr.counit);
  AxiomCheck alg{"algebra associativity and unit", true, {}};
  std::string w = h.algebra().check();
  if (!w.empty()) {
    alg.ok = false;
    alg.witness = w;
  }
  rep.checks.push_back(alg);

  AxiomCheck delta_mult{"comultiplication is multiplicative", true, {}};
  AxiomCheck eps_mult{"counit is multiplicative", true, {}};
  for (std::size_t i = 0; i < n && delta_mult.ok; ++i) {
    Matrix di = c.comul().col(i);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = h.product(h.basis(i), h.basis(j));
      Matrix lhs = c.comul() * prod;
      Matrix rhs = tensor_square_product(h, di, c.comul().col(j));
      if (lhs != rhs) {
        delta_mult.ok = false;
        delta_mult.witness = "Δ(" + c.labels()[i] + "·" + c.labels()[j] + ") = " + format_element(lhs, c.labels(), 2) +
                             " but Δ(" + c.labels()[i] + ")Δ(" + c.labels()[j] + ") = " +
                             format_element(rhs, c.labels(), 2);
        break;
      }
      if (eps_mult.ok && (c.counit() * prod)(0, 0) != c.counit()(0, i) * c.counit()(0, j)) {
        eps_mult.ok = false;
        eps_mult.witness = "ε(" + c.labels()[i] + "·" + c.labels()[j] + ")";
      }
    }
  }
  if (c.comul() * h.unit() != kron(h.unit(), h.unit())) {
    delta_mult.ok = false;
    delta_mult.witness = "Δ(1) ≠ 1⊗1";
  }
  if (!(c.counit() * h.unit())(0, 0).is_one()) {
    eps_mult.ok = false;
    eps_mult.witness = "ε(1) ≠ 1";
  }
  rep.checks.push_back(delta_mult);
  rep.checks.push_back(eps_mult);

  AxiomCheck anti{"antipode", true, {}};
  Matrix id = Matrix::identity(f, n);
  Matrix target = h.unit() * c.counit();
  Matrix left = h.mult() * kron(h.antipode(), id) * c.comul();
  Matrix right = h.mult() * kron(id, h.antipode()) * c.comul();
  for (std::size_t i = 0; i < n && anti.ok; ++i) {
    if (left.col(i) != target.col(i)) {
      anti.ok = false;
      anti.witness = "S(h_1)h_2 ≠ ε(h)1 at " + c.labels()[i];
    } else if (right.col(i) != target.col(i)) {
      anti.ok = false;
      anti.witness = "h_1S(h_2) ≠ ε(h)1 at " + c.labels()[i];
    }
  }
  rep.checks.push_back(anti);

  AxiomCheck bij{"antipode is bijective", true, {}};
  if (!try_inverse(h.antipode())) {
    bij.ok = false;
    bij.witness = "rank " + std::to_string(rank(h.antipode())) + " < " + std::to_string(n);
  }
  rep.checks.push_back(bij);
  if (bij.ok) {
    Matrix s2 = h.antipode() * h.antipode();
    rep.order_s2 = matrix_order(s2, 4 * n + 4);
    rep.order_s4 = matrix_order(s2 * s2, 4 * n + 4);
  }
  return rep;
}

Matrix antipode_power(const HopfAlgebra& h, int k) {
  const Matrix& base = k >= 0 ? h.antipode() : h.antipode_inverse();
  return base.pow(static_cast<unsigned long>(k >= 0 ? k : -k));
}

namespace {

std::string label_of(const HopfAlgebra& h, std::size_t i) { return h.labels()[i]; }

// lambda(b_a b_b).
Matrix product_form(const HopfAlgebra& h, const Matrix& lambda) { return (lambda.transpose() * h.mult()).transpose(); }

Matrix reshape_square(const Matrix& v, std::size_t n) {
  Matrix out(v.field(), n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(a, b) = v(a * n + b, 0);
  return out;
}

AxiomCheck compare_columns(const std::string& name, const HopfAlgebra& h, const Matrix& lhs, const Matrix& rhs) {
  AxiomCheck c{name, true, {}};
  for (std::size_t i = 0; i < lhs.cols(); ++i) {
    if (lhs.col(i) != rhs.col(i)) {
      c.ok = false;
      c.witness = "at " + label_of(h, i) + ": " + format_element(lhs.col(i), h.labels()) + " vs " +
                  format_element(rhs.col(i), h.labels());
      break;
    }
  }
  return c;
}

bool all_ok(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

}  // namespace

std::vector<Matrix> cointegral_space(const HopfAlgebra& h) {
  Field f = h.field();
  std::size_t n = h.dim();
  // Row i*n + j: sum_k Delta[i][j][k] lambda_k - lambda_i 1_j = 0.
  Matrix sys(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) sys(i * n + j, k) = h.comul()(j * n + k, i);
      sys(i * n + j, i) -= h.unit()(j, 0);
    }
  Subspace ker = kernel(sys);
  std::vector<Matrix> out;
  for (std::size_t t = 0; t < ker.dim(); ++t) {
    Matrix v = ker.basis().col(t);
    std::size_t p = 0;
    while (v(p, 0).is_zero()) ++p;
    out.push_back(v(p, 0).inv() * v);
  }
  return out;
}

Matrix cointegral(const HopfAlgebra& h) {
  auto space = cointegral_space(h);
  if (space.size() != 1) {
    throw Error(ErrorKind::DimensionNotOne, "space of left cointegrals has dimension " + std::to_string(space.size()));
  }
  return space[0];
}

bool ModularData::ok() const { return all_ok(checks); }

ModularData modular_data(const HopfAlgebra& h) { return modular_data(h, cointegral(h)); }

ModularData modular_data(const HopfAlgebra& h, const Matrix& lambda) {
  Field f = h.field();
  std::size_t n = h.dim();
  const Matrix& d = h.comul();
  if (lambda.is_zero()) throw Error(ErrorKind::InvalidArgument, "modular data needs a nonzero cointegral");
  ModularData m;
  m.lambda = lambda;

  // <lambda, h_1> h_2 for every basis element: column i.
  Matrix lg(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (lambda(j, 0).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& x = d(j * n + k, i);
        if (!x.is_zero()) lg(k, i) += x * lambda(j, 0);
      }
    }
  std::size_t p = 0;
  while (lambda(p, 0).is_zero()) ++p;
  m.g = lambda(p, 0).inv() * lg.col(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (lg.col(i) != lambda(i, 0) * m.g) {
      throw Error(ErrorKind::NotGrouplike, "<λ, h_1> h_2 is not a multiple of a fixed element",
                  "at " + label_of(h, i) + ": " + format_element(lg.col(i), h.labels()));
    }
  }
  if (d * m.g != kron(m.g, m.g) || !(h.counit() * m.g)(0, 0).is_one()) {
    throw Error(ErrorKind::NotGrouplike, "distinguished element is not grouplike", format_element(m.g, h.labels()));
  }
  m.checks.push_back({"<λ, h_1> h_2 = λ(h) g", true, "g = " + format_element(m.g, h.labels())});

  Matrix pf = product_form(h, lambda);
  Matrix pmat = reshape_square(pf, n);
  auto pinv = try_inverse(pmat.transpose());
  if (!pinv) throw Error(ErrorKind::DegenerateForm, "(a, b) -> λ(ab) is degenerate");
  m.checks.push_back({"(a, b) -> λ(ab) non-degenerate", true, {}});
  // lambda(chi(h) x) = lambda(x h): P^T chi = P.
  m.chi = *pinv * pmat;
  m.alpha = (h.counit() * m.chi).transpose();
  m.alpha_inv = (m.alpha.transpose() * h.antipode()).transpose();

  Matrix expected = antipode_power(h, -2) * h.coalgebra()->left_hit(m.alpha);
  AxiomCheck consistent = compare_columns("χ(h) = S^-2(α -> h)", h, m.chi, expected);
  if (!consistent.ok) throw Error(ErrorKind::InconsistentChi, "χ differs from S^-2(α -> -)", consistent.witness);
  m.checks.push_back(consistent);

  AxiomCheck chi_alg{"χ is an algebra automorphism", true, {}};
  if (m.chi * h.unit() != h.unit()) {
    chi_alg.ok = false;
    chi_alg.witness = "χ(1) ≠ 1";
  }
  AxiomCheck alpha_alg{"α is an algebra map", true, {}};
  for (std::size_t i = 0; i < n && (chi_alg.ok || alpha_alg.ok); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = h.product(h.basis(i), h.basis(j));
      if (chi_alg.ok && m.chi * prod != h.product(m.chi.col(i), m.chi.col(j))) {
        chi_alg.ok = false;
        chi_alg.witness = "at " + label_of(h, i) + "·" + label_of(h, j);
      }
      if (alpha_alg.ok && (m.alpha.transpose() * prod)(0, 0) != m.alpha(i, 0) * m.alpha(j, 0)) {
        alpha_alg.ok = false;
        alpha_alg.witness = "at " + label_of(h, i) + "·" + label_of(h, j);
      }
    }
  m.checks.push_back(chi_alg);
  m.checks.push_back(alpha_alg);
  AxiomCheck inv{"α * (α∘S) = ε", h.coalgebra()->convolve(m.alpha, m.alpha_inv) == h.coalgebra()->counit_functional(), {}};
  m.checks.push_back(inv);
  return m;
}

RadfordReport radford_s4_check(const HopfAlgebra& h, const ModularData& m) {
  RadfordReport rep;
  const Coalgebra& c = *h.coalgebra();
  rep.s4 = antipode_power(h, 4);
  Matrix ginv = h.antipode() * m.g;
  rep.rhs = h.left_mul(ginv) * h.right_mul(m.g) * c.left_hit(m.alpha) * c.right_hit(m.alpha_inv);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (rep.s4.col(i) != rep.rhs.col(i)) {
      rep.residuals.push_back(label_of(h, i) + ": S^4 = " + format_element(rep.s4.col(i), h.labels()) +
                              ", g^-1(α -> h <- α^-1)g = " + format_element(rep.rhs.col(i), h.labels()));
    }
  }
  rep.s4_is_identity = rep.s4.is_identity();
  return rep;
}

bool CointegralPairing::ok() const { return all_ok(checks); }

CointegralPairing frobenius_pairing_from_cointegral(const HopfAlgebra& h, const ModularData& m) {
  CointegralPairing out;
  const Coalgebra& c = *h.coalgebra();
  std::size_t n = h.dim();
  out.form = reshape_square(product_form(h, m.lambda), n) * h.antipode();
  if (!try_inverse(out.form)) throw Error(ErrorKind::DegenerateForm, "β(a, b) = λ(a S(b)) is degenerate");
  out.checks.push_back({"β non-degenerate", true, {}});
  out.checks.push_back({"β balanced", is_balanced(c, out.form), {}});
  NakayamaAutomorphism na = nakayama_automorphism(c, out.form);
  for (const auto& chk : na.checks) out.checks.push_back(chk);
  out.nu = na.nu;
  out.expected_nu = h.left_mul(m.g) * antipode_power(h, 2);
  out.checks.push_back(compare_columns("ν(h) = g S^2(h)", h, out.nu, out.expected_nu));
  return out;
}

}  // namespace nkwb
