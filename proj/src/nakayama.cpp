#include "nkwb/nakayama.hpp"

#include <functional>
#include <optional>

#include "nkwb/random.hpp"

namespace nkwb {

namespace {

void require_right(const Comodule& m, const char* what) {
  if (m.side() != Side::Right) throw Error(ErrorKind::InvalidArgument, std::string(what) + " expects a right comodule");
}

Matrix flatten(const Matrix& f) {
  Matrix v(f.field(), f.rows() * f.cols(), 1);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) v(r * f.cols() + c, 0) = f(r, c);
  return v;
}

Matrix hcat_all(Field f, std::size_t rows, const std::vector<Matrix>& cols) {
  std::size_t total = 0;
  for (const auto& c : cols) total += c.cols();
  Matrix out(f, rows, total);
  std::size_t at = 0;
  for (const auto& c : cols) {
    for (std::size_t j = 0; j < c.cols(); ++j, ++at)
      for (std::size_t r = 0; r < rows; ++r) out(r, at) = c(r, j);
  }
  return out;
}

Matrix unit_column(Field f, std::size_t n, std::size_t i) {
  Matrix v(f, n, 1);
  v(i, 0) = Scalar::one(f);
  return v;
}

// Coordinates of a map C -> M in the basis of Hom^C(C, M).
Matrix hom_coordinates(const LeftNakayama& l, const Matrix& g) {
  auto x = try_solve(l.stacked, flatten(g));
  if (!x) throw Error(ErrorKind::InvalidStructure, "map is not in Hom^C(C, M)");
  return *x;
}

std::string first_difference(const Matrix& a, const Matrix& b) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) {
        return "entry (" + std::to_string(r) + ", " + std::to_string(c) + "): " + a(r, c).str() + " vs " + b(r, c).str();
      }
  return {};
}

struct GridResult {
  bool certified = false;   // the grid was small enough to decide
  bool all_singular = false;
  Matrix witness;           // a nonsingular combination when one exists
  std::string description;
};

// Decides whether every combination sum t_i M_i is singular, where the
// determinant has total degree `degree`. A grid {0..degree}^d determines a
// polynomial of that degree; over a field with at most `degree` elements the
// whole space F^d is enumerated instead.
GridResult singular_on_grid(Field f, const std::vector<Matrix>& mats, std::size_t degree, std::size_t budget) {
  GridResult out;
  std::size_t d = mats.size();
  std::uint64_t q = field_order(f);
  bool exhaustive = q != 0 && q <= degree;
  std::uint64_t side = exhaustive ? q : degree + 1;
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < d; ++i) {
    points *= side;
    if (points > budget) {
      out.description = "grid of " + std::to_string(side) + "^" + std::to_string(d) + " points exceeds the budget";
      return out;
    }
  }
  std::vector<Scalar> values;
  for (std::uint64_t v = 0; v < side; ++v) values.push_back(Scalar::from_int(f, static_cast<long long>(v)));
  std::vector<std::size_t> digit(d, 0);
  out.certified = true;
  for (std::uint64_t p = 0; p < points; ++p) {
    Matrix m(f, mats[0].rows(), mats[0].cols());
    for (std::size_t i = 0; i < d; ++i)
      if (digit[i]) m = m + values[digit[i]] * mats[i];
    if (!det(m).is_zero()) {
      out.all_singular = false;
      out.witness = m;
      out.description = "nonsingular combination found on the grid";
      return out;
    }
    for (std::size_t i = 0; i < d && ++digit[i] == side; ++i) digit[i] = 0;
  }
  out.all_singular = true;
  out.description = std::string(exhaustive ? "every element of the space" : "the determinant on the grid {0..") +
                    (exhaustive ? "" : std::to_string(degree) + "}^" + std::to_string(d)) + " is singular (" +
                    std::to_string(points) + " points)";
  return out;
}

constexpr std::size_t kGridBudget = 20000;

}  // namespace

LeftNakayama nakayama_left_data(const Comodule& m) {
  require_right(m, "N^l");
  const CoalgebraPtr& c = m.coalgebra();
  Field f = m.field();
  std::size_t n = c->dim(), dm = m.dim();
  LeftNakayama out;
  out.basis = hom_space(regular_comodule(c), m);
  std::size_t h = out.basis.size();
  std::vector<Matrix> flat;
  for (const auto& b : out.basis) flat.push_back(flatten(b));
  out.stacked = hcat_all(f, dm * n, flat);
  Matrix co(f, h * n, h);
  for (std::size_t k = 0; k < n && h; ++k) {
    const Matrix& r = c->right_hit_basis(k);
    std::vector<Matrix> images;
    for (const auto& b : out.basis) images.push_back(flatten(b * r));
    auto x = try_solve(out.stacked, hcat_all(f, dm * n, images));
    if (!x) throw Error(ErrorKind::InvalidStructure, "Hom^C(C, M) is not closed under the C*-action");
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = 0; b < h; ++b) co(b * n + k, a) = (*x)(b, a);
  }
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < h; ++t) labels.push_back("ξ" + std::to_string(t));
  out.value = Comodule(c, Side::Right, co, labels);
  // Every finite-dimensional module is rational; the coaction must reconstruct.
  auto rep = check_comodule(out.value);
  if (!rep.ok()) {
    throw Error(ErrorKind::InvalidStructure, "N^l: transported action is not rational",
                rep.coassociativity.witness + rep.counit.witness);
  }
  return out;
}

Comodule nakayama_left(const Comodule& m) { return nakayama_left_data(m).value; }

Matrix nakayama_left_map(const LeftNakayama& source, const LeftNakayama& target, const Matrix& f) {
  Field fl = f.field();
  Matrix out(fl, target.basis.size(), source.basis.size());
  for (std::size_t t = 0; t < source.basis.size(); ++t) {
    Matrix x = hom_coordinates(target, f * source.basis[t]);
    for (std::size_t r = 0; r < x.rows(); ++r) out(r, t) = x(r, 0);
  }
  return out;
}

RightNakayama nakayama_right_data(const Comodule& m) {
  require_right(m, "N^r");
  const CoalgebraPtr& c = m.coalgebra();
  Field f = m.field();
  std::size_t n = c->dim(), dm = m.dim(), d = n * dm;
  Matrix in = Matrix::identity(f, n), im = Matrix::identity(f, dm);
  std::vector<Matrix> rel;
  for (std::size_t k = 0; k < n; ++k) rel.push_back(kron(c->right_hit_basis(k), im) - kron(in, m.action(k)));
  RightNakayama out;
  out.relations = image(hcat_all(f, d, rel));
  out.quotient = quotient(out.relations);
  // c_i (x) m_a -> sum Delta[i][j][l] (c_j (x) m_a) (x) c_l
  Matrix full(f, d * n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& x = c->comul()(j * n + l, i);
        if (x.is_zero()) continue;
        for (std::size_t a = 0; a < dm; ++a) full((j * dm + a) * n + l, i * dm + a) = x;
      }
  Matrix pp = kron(out.quotient.projection, in);
  if (!(pp * full * out.relations.basis()).is_zero()) {
    throw Error(ErrorKind::InvalidStructure, "N^r: coaction does not descend to C (x)_{C*} M");
  }
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < out.quotient.dim; ++t) {
    std::size_t idx = out.quotient.complement[t];
    labels.push_back(c->labels()[idx / dm] + "⊗" + m.labels()[idx % dm]);
  }
  out.value = Comodule(c, Side::Right, pp * full * out.quotient.section, labels);
  return out;
}

Comodule nakayama_right(const Comodule& m) { return nakayama_right_data(m).value; }

Matrix nakayama_right_map(const RightNakayama& source, const RightNakayama& target, const Matrix& f) {
  std::size_t n = source.value.coalgebra()->dim();
  return target.quotient.projection * kron(Matrix::identity(f.field(), n), f) * source.quotient.section;
}

namespace {

// u_M : M -> N^l(N^r M), m -> (c -> [c (x) m]).
Matrix unit_map(const Comodule& m, const RightNakayama& r, const LeftNakayama& lr) {
  Field f = m.field();
  std::size_t n = m.coalgebra()->dim();
  Matrix out(f, lr.basis.size(), m.dim());
  Matrix in = Matrix::identity(f, n);
  for (std::size_t a = 0; a < m.dim(); ++a) {
    Matrix g = r.quotient.projection * kron(in, unit_column(f, m.dim(), a));
    Matrix x = hom_coordinates(lr, g);
    for (std::size_t t = 0; t < x.rows(); ++t) out(t, a) = x(t, 0);
  }
  return out;
}

// e_M : N^r(N^l M) -> M, [c (x) xi] -> xi(c).
Matrix counit_map(const Comodule& m, const LeftNakayama& l, const RightNakayama& rl) {
  Field f = m.field();
  std::size_t n = m.coalgebra()->dim(), h = l.basis.size();
  Matrix full(f, m.dim(), n * h);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < h; ++t)
      for (std::size_t r = 0; r < m.dim(); ++r) full(r, i * h + t) = l.basis[t](r, i);
  if (!(full * rl.relations.basis()).is_zero()) {
    throw Error(ErrorKind::InvalidStructure, "counit is not balanced over C*");
  }
  return full * rl.quotient.section;
}

}  // namespace

AdjunctionReport adjunction(const Comodule& m) {
  AdjunctionReport rep;
  RightNakayama r = nakayama_right_data(m);
  LeftNakayama lr = nakayama_left_data(r.value);
  rep.unit = unit_map(m, r, lr);
  LeftNakayama l = nakayama_left_data(m);
  RightNakayama rl = nakayama_right_data(l.value);
  rep.counit = counit_map(m, l, rl);
  if (!is_colinear(m, lr.value, rep.unit)) {
    rep.unit_colinear.ok = false;
    rep.unit_colinear.witness = "u_M is not colinear";
  }
  if (!is_colinear(rl.value, m, rep.counit)) {
    rep.counit_colinear.ok = false;
    rep.counit_colinear.witness = "e_M is not colinear";
  }
  // e_{N^r M} . N^r(u_M)
  RightNakayama rlr = nakayama_right_data(lr.value);
  Matrix nr_u = nakayama_right_map(r, rlr, rep.unit);
  Matrix e_nr = counit_map(r.value, lr, rlr);
  Matrix left = e_nr * nr_u;
  Matrix id_r = Matrix::identity(m.field(), r.value.dim());
  if (left != id_r) {
    rep.right_triangle.ok = false;
    rep.right_triangle.witness = first_difference(left, id_r);
  }
  // N^l(e_M) . u_{N^l M}
  LeftNakayama lrl = nakayama_left_data(rl.value);
  Matrix u_nl = unit_map(l.value, rl, lrl);
  Matrix nl_e = nakayama_left_map(lrl, l, rep.counit);
  Matrix right = nl_e * u_nl;
  Matrix id_l = Matrix::identity(m.field(), l.value.dim());
  if (right != id_l) {
    rep.left_triangle.ok = false;
    rep.left_triangle.witness = first_difference(right, id_l);
  }
  return rep;
}

bool is_balanced(const Coalgebra& c, const Matrix& b) {
  for (std::size_t k = 0; k < c.dim(); ++k) {
    if (c.right_hit_basis(k).transpose() * b != b * c.left_hit_basis(k)) return false;
  }
  return true;
}

std::vector<Matrix> balanced_form_space(const Coalgebra& c) {
  Field f = c.field();
  std::size_t n = c.dim();
  // unknown B[i][j] at i*n + j; equations (R_k^T B - B L_k)[i][j] = 0
  Matrix eq(f, n * n * n, n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix& r = c.right_hit_basis(k);
    const Matrix& l = c.left_hit_basis(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = (k * n + i) * n + j;
        for (std::size_t p = 0; p < n; ++p) {
          if (!r(p, i).is_zero()) eq(row, p * n + j) += r(p, i);
          if (!l(p, j).is_zero()) eq(row, i * n + p) -= l(p, j);
        }
      }
  }
  Subspace s = kernel(eq);
  std::vector<Matrix> out;
  for (std::size_t t = 0; t < s.dim(); ++t) {
    Matrix b(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = s.basis()(i * n + j, t);
    out.push_back(b);
  }
  return out;
}

PairingResult frobenius_pairing(const CoalgebraPtr& c, std::uint64_t seed) {
  Field f = c->field();
  std::size_t n = c->dim();
  PairingResult out;
  auto space = balanced_form_space(*c);
  out.space_dim = space.size();
  if (space.empty()) {
    out.certificate = "the only balanced form is zero";
    return out;
  }
  auto accept = [&](const Matrix& b, const std::string& how) {
    if (det(b).is_zero()) return false;
    out.kind = PairingResult::Kind::Found;
    out.form = b;
    out.certificate = how;
    return true;
  };
  Rng rng(seed);
  for (int t = 0; t < 64; ++t) {
    Matrix b(f, n, n);
    for (const auto& s : space) b = b + rng.scalar(f, 7) * s;
    if (accept(b, "random combination of the balanced forms")) return out;
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (accept(space[i], "basis form " + std::to_string(i))) return out;
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (accept(space[i] + space[j], "sum of basis forms " + std::to_string(i) + ", " + std::to_string(j))) return out;
      if (accept(space[i] - space[j], "difference of basis forms " + std::to_string(i) + ", " + std::to_string(j))) {
        return out;
      }
    }
  }
  // A non-degenerate balanced form is the same as an isomorphism from the
  // left regular comodule C to the dual of the right regular comodule.
  std::vector<std::string> reasons;
  auto grid = singular_on_grid(f, space, n, kGridBudget);
  if (grid.certified && !grid.all_singular) {
    accept(grid.witness, "grid search");
    return out;
  }
  if (grid.certified) reasons.push_back("determinant: " + grid.description);
  auto iso = iso_comodules(flip_side(left_regular_comodule(c)), flip_side(dual_comodule(regular_comodule(c))), seed);
  if (iso.kind == IsoResult::Kind::Certificate) {
    Matrix b = iso.map.transpose();
    if (!is_balanced(*c, b)) throw Error(ErrorKind::InvalidStructure, "isomorphism does not give a balanced form");
    accept(b, "isomorphism C -> C^* of C^*-modules");
    return out;
  }
  if (iso.kind == IsoResult::Kind::NotIsomorphic) {
    reasons.push_back("C and (C)^* are not isomorphic as C^*-modules: " + iso.witness);
  }
  if (reasons.empty()) {
    throw Error(ErrorKind::DegenerateSearchInconclusive,
                "no non-degenerate balanced form found and none could be excluded; try a larger field", grid.description);
  }
  out.certificate = reasons[0];
  for (std::size_t i = 1; i < reasons.size(); ++i) out.certificate += "; " + reasons[i];
  return out;
}

bool NakayamaAutomorphism::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string coalgebra_map_defect(const Coalgebra& c, const Matrix& phi) {
  if (phi.rows() != c.dim() || phi.cols() != c.dim()) return "wrong shape";
  Matrix lhs = c.comul() * phi, rhs = kron(phi, phi) * c.comul();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (lhs.col(i) != rhs.col(i)) {
      return "Δφ ≠ (φ⊗φ)Δ at " + c.labels()[i] + ": " + format_element(lhs.col(i), c.labels(), 2) + " vs " +
             format_element(rhs.col(i), c.labels(), 2);
    }
  }
  Matrix e = c.counit() * phi;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (e(0, i) != c.counit()(0, i)) return "εφ ≠ ε at " + c.labels()[i];
  }
  return {};
}

NakayamaAutomorphism nakayama_automorphism(const Coalgebra& c, const Matrix& form) {
  Field f = c.field();
  std::size_t n = c.dim();
  auto inv = try_inverse(form);
  if (!inv) throw Error(ErrorKind::DegenerateForm, "the pairing is degenerate");
  NakayamaAutomorphism out;
  out.form = form;
  // beta(y, x) = beta(nu x, y) for all x, y  <=>  B^T = nu^T B
  out.nu = inv->transpose() * form;
  AxiomCheck def{"β(y, x) = β(ν(x), y)", true, {}};
  if (out.nu.transpose() * form != form.transpose()) {
    def.ok = false;
    def.witness = first_difference(out.nu.transpose() * form, form.transpose());
  }
  out.checks.push_back(def);
  AxiomCheck bal{"β is C*-balanced", is_balanced(c, form), {}};
  if (!bal.ok) bal.witness = "β(x <- f, y) ≠ β(x, f -> y)";
  out.checks.push_back(bal);
  AxiomCheck aut{"ν is a coalgebra automorphism", true, coalgebra_map_defect(c, out.nu)};
  aut.ok = aut.witness.empty();
  out.checks.push_back(aut);
  AxiomCheck comul{"β(x₁, y) x₂ = ν(y₁) β(x, y₂)", true, {}};
  for (std::size_t i = 0; i < n && comul.ok; ++i)
    for (std::size_t j = 0; j < n && comul.ok; ++j) {
      Matrix lhs(f, n, 1), rhs(f, n, 1);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& di = c.comul()(p * n + q, i);
          if (!di.is_zero() && !form(p, j).is_zero()) lhs(q, 0) += di * form(p, j);
          const Scalar& dj = c.comul()(p * n + q, j);
          if (!dj.is_zero() && !form(i, q).is_zero()) rhs = rhs + (dj * form(i, q)) * out.nu.col(p);
        }
      if (lhs != rhs) {
        comul.ok = false;
        comul.witness = "x = " + c.labels()[i] + ", y = " + c.labels()[j] + ": " + format_element(lhs, c.labels()) +
                        " vs " + format_element(rhs, c.labels());
      }
    }
  out.checks.push_back(comul);
  return out;
}

Comodule twist_comodule(const Comodule& m, const Matrix& phi) {
  const Coalgebra& c = *m.coalgebra();
  std::string defect = coalgebra_map_defect(c, phi);
  if (!defect.empty()) throw Error(ErrorKind::NotCoalgebraMap, "twist by a map that is not a coalgebra map", defect);
  Matrix im = Matrix::identity(m.field(), m.dim());
  Matrix co = m.side() == Side::Right ? kron(im, phi) * m.coaction() : kron(phi, im) * m.coaction();
  return Comodule(m.coalgebra(), m.side(), co, m.labels());
}

Matrix nakayama_twist_iso(const RightNakayama& nr, const Comodule& m, const Matrix& form) {
  Field f = m.field();
  std::size_t n = m.coalgebra()->dim(), dm = m.dim();
  // c_i (x) m_a -> sum_{b,k} rho[a][b][k] beta(c_i, c_k) m_b
  Matrix full(f, dm, n * dm);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < dm; ++b) {
        Scalar s = Scalar::zero(f);
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& r = m.coaction()(b * n + k, a);
          if (!r.is_zero() && !form(i, k).is_zero()) s += r * form(i, k);
        }
        full(b, i * dm + a) = s;
      }
  if (!(full * nr.relations.basis()).is_zero()) {
    throw Error(ErrorKind::InvalidStructure, "c (x) m -> m_0 β(c, m_1) is not balanced");
  }
  return full * nr.quotient.section;
}

CoinnerResult coinner_test(const CoalgebraPtr& cp, const Matrix& phi, std::uint64_t seed) {
  const Coalgebra& c = *cp;
  Field f = c.field();
  std::size_t n = c.dim();
  CoinnerResult out;
  std::string defect = coalgebra_map_defect(c, phi);
  if (!defect.empty()) throw Error(ErrorKind::NotCoalgebraMap, "coinner test of a map that is not a coalgebra map", defect);
  // sum_k alpha_k (R_k phi - L_k) = 0
  Matrix eq(f, n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix d = flatten(c.right_hit_basis(k) * phi - c.left_hit_basis(k));
    for (std::size_t r = 0; r < n * n; ++r) eq(r, k) = d(r, 0);
  }
  Subspace sol = kernel(eq);
  if (sol.dim() == 0) {
    out.kind = CoinnerResult::Kind::NotCoinner;
    out.witness = "φ(c) <- α = α -> c has only the zero solution";
    return out;
  }
  const Algebra& a = c.dual_algebra();
  auto accept = [&](const Matrix& alpha) {
    auto inv = try_inverse(a.left_mul(alpha));
    if (!inv) return false;
    Matrix alpha_inv = *inv * c.counit_functional();
    if (c.left_hit(alpha) * c.right_hit(alpha_inv) != phi) {
      throw Error(ErrorKind::InvalidStructure, "coinner witness failed the conjugation check");
    }
    out.kind = CoinnerResult::Kind::Inner;
    out.alpha = alpha;
    return true;
  };
  Rng rng(seed);
  for (int t = 0; t < 64; ++t) {
    if (accept(rng.combination(sol.basis(), 7))) return out;
  }
  for (std::size_t i = 0; i < sol.dim(); ++i) {
    if (accept(sol.basis().col(i))) return out;
    for (std::size_t j = i + 1; j < sol.dim(); ++j)
      if (accept(sol.basis().col(i) + sol.basis().col(j))) return out;
  }
  // alpha is invertible iff it acts invertibly on every simple comodule.
  std::vector<Comodule> simples;
  try {
    simples = simple_comodules(cp);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SplitnessError) throw;
    out.witness = "no invertible solution found; simples unavailable: " + std::string(e.what());
    return out;
  }
  for (std::size_t i = 0; i < simples.size(); ++i) {
    std::vector<Matrix> acts;
    for (std::size_t t = 0; t < sol.dim(); ++t) acts.push_back(simples[i].action(sol.basis().col(t)));
    auto g = singular_on_grid(f, acts, simples[i].dim(), kGridBudget);
    if (g.certified && g.all_singular) {
      out.kind = CoinnerResult::Kind::NotCoinner;
      out.witness = "every solution α acts singularly on S" + std::to_string(i) + " (" + g.description + ")";
      return out;
    }
  }
  out.witness = "no invertible solution found among " + std::to_string(sol.dim()) + " dimensions";
  return out;
}

bool NakayamaPermutation::certified() const {
  for (const auto& e : entries)
    for (const auto& c : e.certificates)
      if (!c.result.isomorphic()) return false;
  return true;
}

namespace {

Certified certify(const std::string& claim, const Comodule& a, const Comodule& b, std::uint64_t seed) {
  return Certified{claim, iso_comodules(a, b, seed)};
}

std::string sname(std::size_t i) { return "S" + std::to_string(i); }

// Index j with iso(M, S_j) certified, or npos.
std::size_t match_simple(const Comodule& m, const std::vector<Comodule>& simples, std::uint64_t seed, IsoResult* cert) {
  for (std::size_t j = 0; j < simples.size(); ++j) {
    if (simples[j].dim() != m.dim()) continue;
    auto r = iso_comodules(m, simples[j], seed);
    if (r.isomorphic()) {
      if (cert) *cert = r;
      return j;
    }
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

NakayamaPermutation nakayama_permutation(const CoalgebraPtr& c, std::uint64_t seed) {
  auto simples = simple_comodules(c);
  std::size_t s = simples.size();
  NakayamaPermutation out;
  std::vector<bool> hit(s, false);
  for (std::size_t i = 0; i < s; ++i) {
    PermutationEntry e;
    e.simple = i;
    Comodule nl = nakayama_left(simples[i]);
    Comodule nr = nakayama_right(simples[i]);
    IsoResult cert;
    e.left_image = match_simple(nl, simples, seed, &cert);
    if (e.left_image == static_cast<std::size_t>(-1) || hit[e.left_image]) {
      throw Error(ErrorKind::NotQcF, "N^l(" + sname(i) + ") is not a simple comodule outside the image so far",
                  "dim N^l(" + sname(i) + ") = " + std::to_string(nl.dim()));
    }
    hit[e.left_image] = true;
    e.certificates.push_back(Certified{"N^l(" + sname(i) + ") ≅ " + sname(e.left_image), cert});
    e.right_image = match_simple(nr, simples, seed, &cert);
    if (e.right_image == static_cast<std::size_t>(-1)) {
      throw Error(ErrorKind::NotQcF, "N^r(" + sname(i) + ") is not simple");
    }
    e.certificates.push_back(Certified{"N^r(" + sname(i) + ") ≅ " + sname(e.right_image), cert});
    Comodule p = projective_cover(simples[i]).source;
    Comodule ei = injective_hull(simples[i]).target;
    e.certificates.push_back(
        certify("P(" + sname(i) + ") ≅ E(N^l " + sname(i) + ")", p, injective_hull(simples[e.left_image]).target, seed));
    e.certificates.push_back(certify("soc P(" + sname(i) + ") ≅ N^l(" + sname(i) + ")", subcomodule(p, socle(p)), nl, seed));
    e.certificates.push_back(
        certify("E(" + sname(i) + ") ≅ P(N^r " + sname(i) + ")", ei, projective_cover(simples[e.right_image]).source, seed));
    e.certificates.push_back(certify("top E(" + sname(i) + ") ≅ N^r(" + sname(i) + ")", top(ei).target, nr, seed));
    out.perm.push_back(e.left_image);
    out.entries.push_back(std::move(e));
  }
  return out;
}

bool ClassificationReport::consistent() const {
  if (symmetric.value && !cofrobenius.value) return false;
  if (cofrobenius.value && !qcf.value) return false;
  if (qcf.value && !semiperfect.value) return false;
  return true;
}

bool ClassificationReport::conclusive() const {
  return semiperfect.decided && qcf.decided && cofrobenius.decided && symmetric.decided;
}

ClassificationReport classify(const CoalgebraPtr& c, std::uint64_t seed) {
  ClassificationReport rep;
  auto simples = simple_comodules(c);
  std::size_t s = simples.size();
  std::vector<Comodule> hulls, covers;
  for (const auto& x : simples) {
    hulls.push_back(injective_hull(x).target);
    covers.push_back(projective_cover(x).source);
  }
  rep.semiperfect = {true, true, "finite-dimensional; P(S) computed for all " + std::to_string(s) + " simples"};
  rep.cosemisimple = true;
  for (std::size_t i = 0; i < s; ++i) rep.cosemisimple = rep.cosemisimple && hulls[i].dim() == simples[i].dim();

  // QcF, first route: the injective hulls and projective covers agree as multisets.
  bool multiset = true, undecided = false;
  std::string qcf_witness;
  std::vector<bool> used(s, false);
  for (std::size_t i = 0; i < s && multiset; ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < s && !matched; ++j) {
      if (used[j] || covers[j].dim() != hulls[i].dim()) continue;
      auto r = iso_comodules(hulls[i], covers[j], seed);
      if (r.kind == IsoResult::Kind::Undecided) undecided = true;
      if (r.isomorphic()) {
        used[j] = true;
        matched = true;
        rep.certificates.push_back(Certified{"E(" + sname(i) + ") ≅ P(" + sname(j) + ")", r});
      }
    }
    if (!matched) {
      multiset = false;
      qcf_witness = "E(" + sname(i) + ") (dim " + std::to_string(hulls[i].dim()) + ") is not projective";
    }
  }
  // Second route: S -> soc P(S) is a well-defined bijection on simples.
  bool perm_ok = true;
  std::string perm_witness;
  std::vector<bool> hit(s, false);
  for (std::size_t i = 0; i < s && perm_ok; ++i) {
    Comodule soc = subcomodule(covers[i], socle(covers[i]));
    std::size_t j = match_simple(soc, simples, seed, nullptr);
    if (j == static_cast<std::size_t>(-1)) {
      perm_ok = false;
      perm_witness = "soc P(" + sname(i) + ") has dimension " + std::to_string(soc.dim()) + " and is not simple";
    } else if (hit[j]) {
      perm_ok = false;
      perm_witness = "soc P(" + sname(i) + ") ≅ " + sname(j) + " is hit twice";
    } else {
      hit[j] = true;
    }
  }
  if (multiset != perm_ok && !undecided) {
    throw Error(ErrorKind::InvalidStructure, "QcF routes disagree", qcf_witness + perm_witness);
  }
  rep.qcf.value = multiset && perm_ok;
  rep.qcf.decided = !undecided || multiset;
  rep.qcf.evidence = rep.qcf.value ? "Inj = Proj on indecomposables; S -> soc P(S) is a permutation"
                                   : (qcf_witness.empty() ? perm_witness : qcf_witness);

  // co-Frobenius: QcF and dim N^l(S) = dim S, cross-checked with the pairing search.
  bool dims_ok = true;
  std::string dim_witness;
  if (rep.qcf.value) {
    for (std::size_t i = 0; i < s && dims_ok; ++i) {
      std::size_t d = nakayama_left(simples[i]).dim();
      if (d != simples[i].dim()) {
        dims_ok = false;
        dim_witness = "dim N^l(" + sname(i) + ") = " + std::to_string(d) + " ≠ " + std::to_string(simples[i].dim());
      }
    }
  }
  PairingResult pairing;
  bool pairing_known = true;
  try {
    pairing = frobenius_pairing(c, seed);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateSearchInconclusive) throw;
    pairing_known = false;
    rep.notes.push_back(std::string("pairing search inconclusive: ") + e.what());
  }
  bool cofrob = rep.qcf.value && dims_ok;
  if (pairing_known && pairing.found() != cofrob && rep.qcf.decided) {
    throw Error(ErrorKind::InvalidStructure, "co-Frobenius criteria disagree", pairing.certificate + dim_witness);
  }
  rep.cofrobenius.value = cofrob;
  rep.cofrobenius.decided = rep.qcf.decided;
  if (cofrob) {
    rep.cofrobenius.evidence = "dim N^l(S) = dim S for all simples; Frobenius pairing found (" + pairing.certificate + ")";
  } else if (!rep.qcf.value) {
    rep.cofrobenius.evidence = "not QcF" + (pairing_known ? "; no Frobenius pairing: " + pairing.certificate : "");
  } else {
    rep.cofrobenius.evidence = dim_witness;
  }

  // Symmetric: co-Frobenius with a coinner Nakayama automorphism.
  if (cofrob) {
    auto nu = nakayama_automorphism(*c, pairing.form);
    if (!nu.ok()) throw Error(ErrorKind::InvalidStructure, "Nakayama automorphism failed its checks");
    auto inner = coinner_test(c, nu.nu, seed);
    rep.symmetric.value = inner.kind == CoinnerResult::Kind::Inner;
    rep.symmetric.decided = inner.kind != CoinnerResult::Kind::Undecided;
    rep.symmetric.evidence = rep.symmetric.value ? "ν is coinner" : "ν is not coinner: " + inner.witness;
  } else {
    rep.symmetric = {false, rep.cofrobenius.decided, "not co-Frobenius"};
  }
  if (rep.cosemisimple && !(rep.symmetric.value)) {
    throw Error(ErrorKind::InvalidStructure, "cosemisimple coalgebra not detected as symmetric");
  }
  if (rep.cosemisimple) rep.notes.push_back("cosemisimple");
  return rep;
}

}  // namespace nkwb
