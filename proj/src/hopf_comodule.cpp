#include "nkwb/hopf.hpp"

namespace nkwb {

namespace {

bool all_ok(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

void require_over(const HopfAlgebra& h, const Comodule& x) {
  if (x.side() != Side::Right || !same_coalgebra(x.coalgebra(), h.coalgebra())) {
    throw Error(ErrorKind::InvalidArgument, "expected a right comodule over the Hopf algebra");
  }
}

std::vector<std::string> suffixed(const std::vector<std::string>& labels, const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + suffix);
  return out;
}

// Dual comodule on the dual basis with the H factor transformed by t.
Comodule dual_with(const HopfAlgebra& h, const Comodule& x, const Matrix& t, const std::string& suffix) {
  require_over(h, x);
  Field f = h.field();
  std::size_t n = h.dim(), d = x.dim();
  Matrix co(f, d * n, d);
  Matrix v(f, n, 1);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        v(k, 0) = x.coaction()(b * n + k, a);
        any = any || !v(k, 0).is_zero();
      }
      if (!any) continue;
      Matrix tv = t * v;
      for (std::size_t k = 0; k < n; ++k) co(a * n + k, b) = tv(k, 0);
    }
  return Comodule(h.coalgebra(), Side::Right, co, suffixed(x.labels(), suffix));
}

AxiomCheck check_equal(const std::string& name, const Matrix& a, const Matrix& b) {
  AxiomCheck c{name, a == b, {}};
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    c.ok = false;
    c.witness = "shapes differ";
  } else if (!c.ok) {
    for (std::size_t r = 0; r < a.rows() && c.witness.empty(); ++r)
      for (std::size_t col = 0; col < a.cols(); ++col)
        if (a(r, col) != b(r, col)) {
          c.witness = "entry (" + std::to_string(r) + ", " + std::to_string(col) + "): " + a(r, col).str() + " vs " +
                      b(r, col).str();
          break;
        }
  }
  return c;
}

AxiomCheck check_colinear(const std::string& name, const Comodule& a, const Comodule& b, const Matrix& f) {
  return AxiomCheck{name, is_colinear(a, b, f), {}};
}

AxiomCheck check_invertible(const std::string& name, const Matrix& f) {
  AxiomCheck c{name, f.rows() == f.cols() && try_inverse(f).has_value(), {}};
  if (!c.ok) c.witness = std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ", rank " + std::to_string(rank(f));
  return c;
}

Matrix flat_identity(Field f, std::size_t d) {
  Matrix v(f, d * d, 1);
  for (std::size_t i = 0; i < d; ++i) v(i * d + i, 0) = Scalar::one(f);
  return v;
}

}  // namespace

Comodule comodule_unit(const HopfAlgebra& h) { return Comodule(h.coalgebra(), Side::Right, h.unit(), {"1"}); }

Comodule grouplike_comodule(const HopfAlgebra& h, const Matrix& g, const std::string& label) {
  if (h.comul() * g != kron(g, g) || !(h.counit() * g)(0, 0).is_one()) {
    throw Error(ErrorKind::NotGrouplike, "k_g needs a grouplike element", format_element(g, h.labels()));
  }
  return Comodule(h.coalgebra(), Side::Right, g, {label});
}

Comodule comodule_tensor(const HopfAlgebra& h, const Comodule& x, const Comodule& y) {
  require_over(h, x);
  require_over(h, y);
  Field f = h.field();
  std::size_t n = h.dim(), dx = x.dim(), dy = y.dim();
  Matrix co(f, dx * dy * n, dx * dy);
  const Matrix& m = h.mult();
  for (std::size_t p = 0; p < dx; ++p)
    for (std::size_t pp = 0; pp < dx; ++pp)
      for (std::size_t k1 = 0; k1 < n; ++k1) {
        const Scalar& r1 = x.coaction()(pp * n + k1, p);
        if (r1.is_zero()) continue;
        for (std::size_t q = 0; q < dy; ++q)
          for (std::size_t qq = 0; qq < dy; ++qq)
            for (std::size_t k2 = 0; k2 < n; ++k2) {
              const Scalar& r2 = y.coaction()(qq * n + k2, q);
              if (r2.is_zero()) continue;
              Scalar c = r1 * r2;
              for (std::size_t k = 0; k < n; ++k) {
                const Scalar& mm = m(k, k1 * n + k2);
                if (!mm.is_zero()) co((pp * dy + qq) * n + k, p * dy + q) += c * mm;
              }
            }
      }
  std::vector<std::string> labels;
  for (const auto& a : x.labels())
    for (const auto& b : y.labels()) labels.push_back(a + "⊗" + b);
  return Comodule(h.coalgebra(), Side::Right, co, labels);
}

Comodule left_dual(const HopfAlgebra& h, const Comodule& x) { return dual_with(h, x, h.antipode(), "*"); }

Comodule right_dual(const HopfAlgebra& h, const Comodule& x) { return dual_with(h, x, h.antipode_inverse(), "°"); }

Comodule double_dual(const HopfAlgebra& h, const Comodule& x) { return left_dual(h, left_dual(h, x)); }

Comodule double_right_dual(const HopfAlgebra& h, const Comodule& x) { return right_dual(h, right_dual(h, x)); }

Comodule antipode_twist(const HopfAlgebra& h, const Comodule& x, int k) {
  require_over(h, x);
  Matrix co = kron(Matrix::identity(h.field(), x.dim()), antipode_power(h, k)) * x.coaction();
  return Comodule(h.coalgebra(), Side::Right, co, x.labels());
}

bool RigidityReport::ok() const { return all_ok(checks); }

RigidityReport check_rigidity(const HopfAlgebra& h, const Comodule& x, const Comodule& y) {
  RigidityReport rep;
  Field f = h.field();
  std::size_t d = x.dim();
  Comodule one = comodule_unit(h);
  Matrix ix = Matrix::identity(f, d);
  Matrix pairing = flat_identity(f, d);  // sum_j e_j (x) e^j, also the evaluation row
  Matrix ev = pairing.transpose(), coev = pairing;

  Comodule xl = left_dual(h, x);
  rep.checks.push_back(check_colinear("ev: X^v (x) X -> 1 colinear", comodule_tensor(h, xl, x), one, ev));
  rep.checks.push_back(check_colinear("coev: 1 -> X (x) X^v colinear", one, comodule_tensor(h, x, xl), coev));
  rep.checks.push_back(check_equal("(id (x) ev)(coev (x) id) = id_X", kron(ix, ev) * kron(coev, ix), ix));
  rep.checks.push_back(check_equal("(ev (x) id)(id (x) coev) = id_X^v", kron(ev, ix) * kron(ix, coev), ix));

  Comodule xr = right_dual(h, x);
  rep.checks.push_back(check_colinear("ev: X (x) ^vX -> 1 colinear", comodule_tensor(h, x, xr), one, ev));
  rep.checks.push_back(check_colinear("coev: 1 -> ^vX (x) X colinear", one, comodule_tensor(h, xr, x), coev));
  rep.checks.push_back(check_equal("(ev (x) id)(id (x) coev) = id_X", kron(ev, ix) * kron(ix, coev), ix));

  rep.checks.push_back(check_equal("X^vv = X^(S^2)", double_dual(h, x).coaction(), antipode_twist(h, x, 2).coaction()));
  rep.checks.push_back(
      check_equal("^vvX = X^(S^-2)", double_right_dual(h, x).coaction(), antipode_twist(h, x, -2).coaction()));

  Matrix flip = swap_tensor(f, y.dim(), x.dim());
  Comodule lhs = comodule_tensor(h, left_dual(h, y), xl);
  Comodule rhs = left_dual(h, comodule_tensor(h, x, y));
  rep.checks.push_back(check_colinear("Y^v (x) X^v -> (X (x) Y)^v colinear", lhs, rhs, flip));
  return rep;
}

std::vector<Comodule> builtin_comodule_family(const HopfAlgebra& h) {
  std::vector<Comodule> out;
  Comodule one = comodule_unit(h);
  out.push_back(one);
  for (const auto& s : simple_comodules(h.coalgebra())) out.push_back(s);
  out.push_back(injective_hull(one).target);
  return out;
}

bool ModularObject::ok() const { return all_ok(checks); }

ModularObject modular_object(const HopfAlgebra& h, const ModularData& m) {
  ModularObject out;
  Comodule one = comodule_unit(h);
  out.nr = nakayama_right_data(one);
  out.gc = out.nr.value;
  out.kg = grouplike_comodule(h, m.g, "g");
  out.checks.push_back({"dim N^r(1) = 1", out.gc.dim() == 1, "dim " + std::to_string(out.gc.dim())});
  if (out.gc.dim() != 1) return out;
  Matrix lam = m.lambda.transpose();
  out.checks.push_back({"κ well defined on H (x)_{H*} k", (lam * out.nr.relations.basis()).is_zero(), {}});
  out.kappa = lam * out.nr.quotient.section;
  out.checks.push_back(check_invertible("κ invertible", out.kappa));
  out.checks.push_back(check_colinear("κ: N^r(1) -> k g colinear", out.gc, out.kg, out.kappa));
  out.unimodular = m.g == h.unit();
  return out;
}

bool PsiMaps::ok() const { return all_ok(checks); }

PsiMaps psi_maps(const HopfAlgebra& h, const Comodule& x, const Comodule& y) {
  require_over(h, x);
  require_over(h, y);
  Field f = h.field();
  std::size_t n = h.dim(), dx = x.dim(), dy = y.dim();
  PsiMaps out;
  out.source = nakayama_right_data(comodule_tensor(h, x, y));
  out.nx = nakayama_right_data(x);
  out.ny = nakayama_right_data(y);
  out.left_target = comodule_tensor(h, double_right_dual(h, x), out.ny.value);
  out.right_target = comodule_tensor(h, out.nx.value, double_dual(h, y));

  // Tables of S^-1(b_k) b_c, b_c S(b_k) and S^-2(b_k) b_c; column k*n + c or c*n + k.
  Matrix in = Matrix::identity(f, n);
  Matrix sinv_left = h.mult() * kron(h.antipode_inverse(), in);
  Matrix s_right = h.mult() * kron(in, h.antipode());
  Matrix sinv2_left = h.mult() * kron(antipode_power(h, -2), in);

  std::size_t dom = n * dx * dy;
  Matrix lift_l(f, dom, dom), lift_r(f, dom, dom), lift_inv(f, dom, dom);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < dx; ++a)
      for (std::size_t b = 0; b < dx; ++b)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& r = x.coaction()(b * n + k, a);
          if (r.is_zero()) continue;
          for (std::size_t cc = 0; cc < n; ++cc) {
            const Scalar& p = sinv_left(cc, k * n + c);
            const Scalar& q = sinv2_left(cc, k * n + c);
            for (std::size_t yq = 0; yq < dy; ++yq) {
              // b_c (x) x_a (x) y_q -> x_b (x) S^-1(b_k) b_c (x) y_q
              if (!p.is_zero()) lift_l(b * n * dy + cc * dy + yq, (c * dx + a) * dy + yq) += r * p;
              // x_a (x) b_c (x) y_q -> S^-2(b_k) b_c (x) x_b (x) y_q
              if (!q.is_zero()) lift_inv((cc * dx + b) * dy + yq, a * n * dy + c * dy + yq) += r * q;
            }
          }
        }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t q = 0; q < dy; ++q)
      for (std::size_t qq = 0; qq < dy; ++qq)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& r = y.coaction()(qq * n + k, q);
          if (r.is_zero()) continue;
          for (std::size_t cc = 0; cc < n; ++cc) {
            const Scalar& p = s_right(cc, c * n + k);
            if (p.is_zero()) continue;
            for (std::size_t a = 0; a < dx; ++a) lift_r((cc * dx + a) * dy + qq, (c * dx + a) * dy + q) += r * p;
          }
        }

  Matrix proj_l = kron(Matrix::identity(f, dx), out.ny.quotient.projection);
  Matrix proj_r = kron(out.nx.quotient.projection, Matrix::identity(f, dy));
  const Matrix& rel = out.source.relations.basis();
  out.checks.push_back({"Ψ^l well defined", (proj_l * lift_l * rel).is_zero(), {}});
  out.checks.push_back({"Ψ^r well defined", (proj_r * lift_r * rel).is_zero(), {}});
  out.left = proj_l * lift_l * out.source.quotient.section;
  out.right = proj_r * lift_r * out.source.quotient.section;
  out.checks.push_back(check_colinear("Ψ^l colinear", out.source.value, out.left_target, out.left));
  out.checks.push_back(check_colinear("Ψ^r colinear", out.source.value, out.right_target, out.right));
  out.checks.push_back(check_invertible("Ψ^l invertible", out.left));
  out.checks.push_back(check_invertible("Ψ^r invertible", out.right));

  Matrix rel_target = kron(Matrix::identity(f, dx), out.ny.relations.basis());
  out.checks.push_back(
      {"(Ψ^l)^-1 formula well defined", (out.source.quotient.projection * lift_inv * rel_target).is_zero(), {}});
  out.left_inverse_formula =
      out.source.quotient.projection * lift_inv * kron(Matrix::identity(f, dx), out.ny.quotient.section);
  auto inv = try_inverse(out.left);
  out.checks.push_back(
      check_equal("(Ψ^l)^-1 = S^-2(x_1) h (x) (x_0 (x) y)", out.left_inverse_formula, inv ? *inv : out.left));
  return out;
}

bool NakayamaDualityReport::certified() const {
  for (const auto& c : certificates)
    if (!c.result.isomorphic()) return false;
  return true;
}

namespace {

Certified explicit_certificate(const std::string& claim, const Comodule& a, const Comodule& b, const Matrix& f) {
  Certified c{claim, {}};
  if (is_colinear(a, b, f) && try_inverse(f)) {
    c.result.kind = IsoResult::Kind::Certificate;
    c.result.map = f;
  } else {
    c.result.kind = IsoResult::Kind::Undecided;
    c.result.witness = "explicit map is not a colinear isomorphism";
  }
  return c;
}

}  // namespace

NakayamaDualityReport naka_vs_dual(const HopfAlgebra& h, const ModularObject& g, const Comodule& x, bool simple,
                                   std::uint64_t seed) {
  NakayamaDualityReport rep;
  Comodule one = comodule_unit(h);
  PsiMaps right = psi_maps(h, one, x);
  PsiMaps left = psi_maps(h, x, one);
  Comodule nx = nakayama_right(x);
  // N^r(1 (x) X) and N^r(X (x) 1) are N^r(X) in the same coordinates.
  rep.certificates.push_back(
      explicit_certificate("N^r(X) ≅ g (x) X^vv via Ψ^r_{1,X}", nx, right.right_target, right.right));
  rep.certificates.push_back(
      explicit_certificate("N^r(X) ≅ ^vvX (x) g via Ψ^l_{X,1}", nx, left.left_target, left.left));
  if (simple) {
    Comodule gs = comodule_tensor(h, g.gc, double_dual(h, x));
    Comodule e = injective_hull(x).target;
    Comodule p = projective_cover(gs).source;
    rep.certificates.push_back({"E(S) ≅ P(g (x) S^vv)", iso_comodules(e, p, seed)});
    Comodule gd = comodule_tensor(h, left_dual(h, g.gc), double_right_dual(h, x));
    Comodule ps = projective_cover(x).source;
    Comodule eg = injective_hull(gd).target;
    rep.certificates.push_back({"P(S) ≅ E(g^v (x) ^vvS)", iso_comodules(ps, eg, seed)});
  }
  return rep;
}

bool RadfordIso::ok() const { return all_ok(checks); }

namespace {

// r_X from x (x) [h] -> [x_2 h S^3(x_1)] (x) x_0.
Matrix radford_explicit(const HopfAlgebra& h, const ModularObject& g, const Comodule& x) {
  Field f = h.field();
  std::size_t n = h.dim(), d = x.dim();
  Matrix hv = g.nr.quotient.section.col(0);
  Matrix w = g.nr.quotient.projection * h.mult() * kron(h.right_mul(hv), antipode_power(h, 3));
  Matrix r(f, d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t bp = 0; bp < d; ++bp)
      for (std::size_t k2 = 0; k2 < n; ++k2) {
        const Scalar& r2 = x.coaction()(bp * n + k2, a);
        if (r2.is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t k1 = 0; k1 < n; ++k1) {
            const Scalar& r1 = x.coaction()(b * n + k1, bp);
            if (r1.is_zero()) continue;
            const Scalar& ww = w(0, k2 * n + k1);
            if (!ww.is_zero()) r(b, a) += r2 * r1 * ww;
          }
      }
  return r;
}

}  // namespace

RadfordIso radford_isomorphism(const HopfAlgebra& h, const ModularData& m, const ModularObject& g,
                               const Comodule& x) {
  require_over(h, x);
  RadfordIso out;
  Field f = h.field();
  std::size_t n = h.dim(), d = x.dim();
  Comodule x4 = double_dual(h, double_dual(h, x));
  Comodule dom = comodule_tensor(h, x, g.gc), cod = comodule_tensor(h, g.gc, x4);

  out.explicit_form = radford_explicit(h, g, x);
  out.checks.push_back(check_colinear("r_X colinear (explicit)", dom, cod, out.explicit_form));
  out.checks.push_back(check_invertible("r_X invertible", out.explicit_form));

  Comodule y = double_dual(h, x);
  Comodule one = comodule_unit(h);
  PsiMaps pl = psi_maps(h, y, one);
  PsiMaps pr = psi_maps(h, one, y);
  bool same_source = pl.source.quotient.projection == pr.source.quotient.projection &&
                     pl.source.quotient.section == pr.source.quotient.section;
  out.checks.push_back({"N^r(X^vv (x) 1) = N^r(1 (x) X^vv)", same_source, {}});
  auto linv = try_inverse(pl.left);
  if (linv && same_source) {
    out.psi_form = pr.right * *linv;
  } else {
    out.psi_form = Matrix(f, d, d);
  }
  out.checks.push_back(check_equal("r_X explicit = Ψ^r_{1,X^vv} (Ψ^l_{X^vv,1})^-1", out.explicit_form, out.psi_form));

  out.r_prime = Matrix(f, d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& r = x.coaction()(b * n + k, a);
        if (!r.is_zero()) out.r_prime(b, a) += r * m.alpha_inv(k, 0);
      }
  out.checks.push_back(check_colinear("r'_X colinear", comodule_tensor(h, x, g.kg), comodule_tensor(h, g.kg, x4),
                                      out.r_prime));
  Matrix id = Matrix::identity(f, d);
  auto kinv = try_inverse(kron(g.kappa, id));
  out.transported = kinv ? *kinv * out.r_prime * kron(id, g.kappa) : Matrix(f, d, d);
  out.checks.push_back(check_equal("r_X explicit = (κ (x) id)^-1 r'_X (id (x) κ)", out.explicit_form, out.transported));
  return out;
}

AxiomCheck radford_multiplicativity(const HopfAlgebra& h, const ModularData& m, const ModularObject& g,
                                    const Comodule& x, const Comodule& y) {
  (void)m;
  Field f = h.field();
  Matrix rxy = radford_explicit(h, g, comodule_tensor(h, x, y));
  Matrix rx = radford_explicit(h, g, x), ry = radford_explicit(h, g, y);
  Matrix composite = kron(rx, Matrix::identity(f, y.dim())) * kron(Matrix::identity(f, x.dim()), ry);
  return check_equal("r_{X (x) Y} = (r_X (x) id)(id (x) r_Y)", rxy, composite);
}

}  // namespace nkwb
