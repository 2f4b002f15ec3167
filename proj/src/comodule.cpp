#include "nkwb/comodule.hpp"

#include <algorithm>

#include "cache.hpp"
#include "nkwb/random.hpp"

namespace nkwb {

std::string side_name(Side s) { return s == Side::Right ? "right" : "left"; }

Comodule::Comodule(CoalgebraPtr c, Side side, Matrix coaction, std::vector<std::string> labels)
    : coalgebra_(std::move(c)),
      side_(side),
      dim_(coaction.cols()),
      coaction_(std::move(coaction)),
      labels_(std::move(labels)),
      cache_(std::make_shared<ComoduleCache>()) {
  std::size_t n = coalgebra_->dim();
  if (coaction_.rows() != dim_ * n) {
    throw Error(ErrorKind::DimensionMismatch, "coaction matrix has " + std::to_string(coaction_.rows()) +
                                                  " rows, expected " + std::to_string(dim_ * n));
  }
  if (dim_ * n > 0 && coaction_.field() != coalgebra_->field()) {
    throw Error(ErrorKind::FieldMismatch, "comodule and coalgebra fields differ");
  }
  if (coaction_.field() == nullptr) coaction_ = Matrix(coalgebra_->field(), coaction_.rows(), coaction_.cols());
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("m" + std::to_string(i));
  }
  if (labels_.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "wrong number of comodule labels");
}

Scalar Comodule::rho(std::size_t a, std::size_t b, std::size_t k) const {
  std::size_t n = coalgebra_->dim();
  return side_ == Side::Right ? coaction_(b * n + k, a) : coaction_(k * dim_ + b, a);
}

const Matrix& Comodule::action(std::size_t k) const {
  return cache_->actions.get([&] {
    std::size_t n = coalgebra_->dim();
    std::vector<Matrix> acts(n, Matrix(field(), dim_, dim_));
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b)
        for (std::size_t kk = 0; kk < n; ++kk) {
          Scalar r = rho(a, b, kk);
          if (!r.is_zero()) acts[kk](b, a) = r;
        }
    return acts;
  })[k];
}

Matrix Comodule::action(const Matrix& f) const {
  Matrix out(field(), dim_, dim_);
  for (std::size_t k = 0; k < coalgebra_->dim(); ++k) {
    if (f(k, 0).is_zero()) continue;
    out = out + f(k, 0) * action(k);
  }
  return out;
}

ComoduleReport check_comodule(const Comodule& m) {
  ComoduleReport rep;
  const Coalgebra& c = *m.coalgebra();
  Field f = m.field();
  std::size_t n = c.dim(), d = m.dim();
  Matrix in = Matrix::identity(f, n), im = Matrix::identity(f, d);
  Matrix lhs, rhs, cu;
  if (m.side() == Side::Right) {
    lhs = kron(m.coaction(), in) * m.coaction();
    rhs = kron(im, c.comul()) * m.coaction();
    cu = kron(im, c.counit()) * m.coaction();
  } else {
    lhs = kron(in, m.coaction()) * m.coaction();
    rhs = kron(c.comul(), im) * m.coaction();
    cu = kron(c.counit(), im) * m.coaction();
  }
  for (std::size_t a = 0; a < d && rep.coassociativity.ok; ++a) {
    if (lhs.col(a) != rhs.col(a)) {
      rep.coassociativity.ok = false;
      rep.coassociativity.witness = "at " + m.labels()[a];
    }
  }
  for (std::size_t a = 0; a < d && rep.counit.ok; ++a) {
    Matrix col = cu.col(a);
    for (std::size_t b = 0; b < d; ++b) {
      if (b == a ? !col(b, 0).is_one() : !col(b, 0).is_zero()) {
        rep.counit.ok = false;
        rep.counit.witness = "at " + m.labels()[a];
        break;
      }
    }
  }
  return rep;
}

Comodule regular_comodule(const CoalgebraPtr& c) { return Comodule(c, Side::Right, c->comul(), c->labels()); }

Comodule left_regular_comodule(const CoalgebraPtr& c) { return Comodule(c, Side::Left, c->comul(), c->labels()); }

Comodule flip_side(const Comodule& m) {
  std::size_t n = m.coalgebra()->dim(), d = m.dim();
  Field f = m.field();
  if (m.side() == Side::Right) {
    return Comodule(cop(m.coalgebra()), Side::Left, swap_tensor(f, d, n) * m.coaction(), m.labels());
  }
  return Comodule(cop(m.coalgebra()), Side::Right, swap_tensor(f, n, d) * m.coaction(), m.labels());
}

namespace {

void require_compatible(const Comodule& m, const Comodule& n, const char* what) {
  if (m.side() != n.side()) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": comodules on different sides");
  if (!same_coalgebra(m.coalgebra(), n.coalgebra())) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": comodules over different coalgebras");
  }
}

}  // namespace

bool is_colinear(const Comodule& m, const Comodule& n, const Matrix& f) {
  require_compatible(m, n, "colinearity");
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  std::size_t k = m.coalgebra()->dim();
  Matrix ik = Matrix::identity(m.field(), k);
  if (m.side() == Side::Right) return n.coaction() * f == kron(f, ik) * m.coaction();
  return n.coaction() * f == kron(ik, f) * m.coaction();
}

std::vector<Matrix> hom_space(const Comodule& m, const Comodule& n) {
  require_compatible(m, n, "hom_space");
  Field f = m.field();
  std::size_t dm = m.dim(), dn = n.dim(), nc = m.coalgebra()->dim();
  std::vector<Matrix> out;
  if (dm == 0 || dn == 0) return out;
  std::size_t vars = dm * dn;
  Matrix eq(f, nc * dn * dm, vars);
  for (std::size_t k = 0; k < nc; ++k) {
    const Matrix& am = m.action(k);
    const Matrix& an = n.action(k);
    for (std::size_t b = 0; b < dn; ++b)
      for (std::size_t a = 0; a < dm; ++a) {
        std::size_t row = (k * dn + b) * dm + a;
        // (F A^M)[b][a] = sum_c F[b][c] A^M[c][a]
        for (std::size_t c = 0; c < dm; ++c) {
          const Scalar& x = am(c, a);
          if (!x.is_zero()) eq(row, b * dm + c) += x;
        }
        // (A^N F)[b][a] = sum_c A^N[b][c] F[c][a]
        for (std::size_t c = 0; c < dn; ++c) {
          const Scalar& x = an(b, c);
          if (!x.is_zero()) eq(row, c * dm + a) -= x;
        }
      }
  }
  Subspace k = kernel(eq);
  for (std::size_t s = 0; s < k.dim(); ++s) {
    Matrix fm(f, dn, dm);
    for (std::size_t b = 0; b < dn; ++b)
      for (std::size_t a = 0; a < dm; ++a) fm(b, a) = k.basis()(b * dm + a, s);
    out.push_back(fm);
  }
  return out;
}

Comodule subcomodule(const Comodule& m, const Subspace& v, Matrix* inclusion) {
  Field f = m.field();
  std::size_t n = m.coalgebra()->dim();
  const Matrix& b = v.basis();
  Matrix in = Matrix::identity(f, n);
  Matrix lifted = m.side() == Side::Right ? kron(b, in) : kron(in, b);
  auto x = try_solve(lifted, m.coaction() * b);
  if (!x) throw Error(ErrorKind::InvalidArgument, "subspace is not a subcomodule");
  if (inclusion) *inclusion = b;
  return Comodule(m.coalgebra(), m.side(), *x);
}

Comodule quotient_comodule(const Comodule& m, const Subspace& v, Matrix* projection) {
  Field f = m.field();
  std::size_t n = m.coalgebra()->dim();
  Cokernel q = quotient(v);
  Matrix in = Matrix::identity(f, n);
  Matrix pp = m.side() == Side::Right ? kron(q.projection, in) : kron(in, q.projection);
  if (!(pp * m.coaction() * v.basis()).is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "quotient by a subspace that is not a subcomodule");
  }
  if (projection) *projection = q.projection;
  return Comodule(m.coalgebra(), m.side(), pp * m.coaction() * q.section);
}

Comodule direct_sum(const Comodule& x, const Comodule& y) {
  require_compatible(x, y, "direct_sum");
  Field f = x.field();
  std::size_t n = x.coalgebra()->dim(), dx = x.dim(), dy = y.dim(), d = dx + dy;
  Matrix co(f, d * n, d);
  auto index = [&](std::size_t b, std::size_t k) { return x.side() == Side::Right ? b * n + k : k * d + b; };
  for (std::size_t a = 0; a < dx; ++a)
    for (std::size_t b = 0; b < dx; ++b)
      for (std::size_t k = 0; k < n; ++k) co(index(b, k), a) = x.rho(a, b, k);
  for (std::size_t a = 0; a < dy; ++a)
    for (std::size_t b = 0; b < dy; ++b)
      for (std::size_t k = 0; k < n; ++k) co(index(dx + b, k), dx + a) = y.rho(a, b, k);
  std::vector<std::string> labels = x.labels();
  for (const auto& l : y.labels()) labels.push_back(l + "'");
  return Comodule(x.coalgebra(), x.side(), co, labels);
}

Comodule dual_comodule(const Comodule& m) {
  Field f = m.field();
  std::size_t n = m.coalgebra()->dim(), d = m.dim();
  Matrix co(f, d * n, d);
  Side side = m.side() == Side::Right ? Side::Left : Side::Right;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar r = m.rho(a, b, k);
        if (r.is_zero()) continue;
        // dual coefficient rho*[b][a][k] = rho[a][b][k]
        std::size_t row = side == Side::Left ? k * d + a : a * n + k;
        co(row, b) = r;
      }
  std::vector<std::string> labels;
  for (const auto& l : m.labels()) labels.push_back(l + "*");
  return Comodule(m.coalgebra(), side, co, labels);
}

Subspace socle(const Comodule& m) {
  const DualDecomposition& d = dual_decomposition(*m.coalgebra());
  Field f = m.field();
  Matrix stacked(f, 0, m.dim());
  for (std::size_t j = 0; j < d.radical.dim(); ++j) stacked = vcat(stacked, m.action(d.radical.basis().col(j)));
  return kernel(stacked);
}

Subspace radical_of(const Comodule& m) {
  const DualDecomposition& d = dual_decomposition(*m.coalgebra());
  Field f = m.field();
  Matrix gens(f, m.dim(), 0);
  for (std::size_t j = 0; j < d.radical.dim(); ++j) gens = hcat(gens, m.action(d.radical.basis().col(j)));
  return image(gens);
}

ComoduleMap top(const Comodule& m) {
  Matrix p;
  Comodule t = quotient_comodule(m, radical_of(m), &p);
  return ComoduleMap{m, t, p};
}

namespace {

bool subspace_less(const Subspace& x, const Subspace& y) {
  auto pivots = [](const Subspace& s) {
    std::vector<std::size_t> p;
    for (std::size_t c = 0; c < s.dim(); ++c)
      for (std::size_t r = 0; r < s.ambient(); ++r)
        if (!s.basis()(r, c).is_zero()) {
          p.push_back(r);
          break;
        }
    return p;
  };
  auto px = pivots(x), py = pivots(y);
  if (px != py) return px < py;
  for (std::size_t i = 0; i < x.basis().data().size(); ++i) {
    const Scalar& a = x.basis().data()[i];
    const Scalar& b = y.basis().data()[i];
    if (a != b) return scalar_less(a, b);
  }
  return false;
}

const SimpleData& simple_data(const CoalgebraPtr& c) {
  return c->cache().simples.get([&] {
    const DualDecomposition& d = dual_decomposition(*c);
    if (!d.splitting.unsplit.empty()) {
      throw Error(ErrorKind::SplitnessError,
                  "C*/J has a simple block that does not split over " + field_name(c->field()) +
                      "; extend the field",
                  {}, d.splitting.unsplit_dims.front());
    }
    const Algebra& b = d.semisimple;
    Field f = c->field();
    std::size_t n = c->dim();
    std::size_t blocks = d.splitting.blocks;
    std::vector<std::size_t> size(blocks, 0), rep(blocks, d.splitting.idempotents.size());
    for (std::size_t i = 0; i < d.splitting.block.size(); ++i) {
      std::size_t blk = d.splitting.block[i];
      ++size[blk];
      if (rep[blk] == d.splitting.idempotents.size()) rep[blk] = i;
    }
    std::vector<Matrix> left(n);
    for (std::size_t k = 0; k < n; ++k) left[k] = b.left_mul(d.quotient.projection.col(k));
    struct Entry {
      Matrix coaction;
      Subspace coefficients;
      std::size_t block;
    };
    std::vector<Entry> entries;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      const Matrix& e = d.splitting.idempotents[rep[blk]];
      Subspace be = image(b.right_mul(e));
      std::size_t ds = be.dim();
      if (ds != size[blk]) {
        throw Error(ErrorKind::SplitnessError, "simple block is not a full matrix algebra over the field", {},
                    ds * size[blk]);
      }
      Matrix co(f, ds * n, ds);
      Matrix coeffs(f, n, ds * ds);
      for (std::size_t k = 0; k < n; ++k) {
        Matrix ak = coordinates(be.basis(), left[k] * be.basis());
        for (std::size_t a = 0; a < ds; ++a)
          for (std::size_t bb = 0; bb < ds; ++bb) {
            co(bb * n + k, a) = ak(bb, a);
            coeffs(k, a * ds + bb) = ak(bb, a);
          }
      }
      entries.push_back({co, image(coeffs), blk});
    }
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return subspace_less(entries[x].coefficients, entries[y].coefficients);
    });
    SimpleData out;
    std::vector<std::size_t> position(blocks);
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.coactions.push_back(entries[order[i]].coaction);
      out.representative.push_back(rep[entries[order[i]].block]);
      position[entries[order[i]].block] = i;
    }
    for (std::size_t blk : d.splitting.block) out.simple_of.push_back(position[blk]);
    return out;
  });
}

}  // namespace

std::vector<Comodule> simple_comodules(const CoalgebraPtr& c) {
  const SimpleData& s = simple_data(c);
  std::vector<Comodule> out;
  for (std::size_t i = 0; i < s.coactions.size(); ++i) {
    std::vector<std::string> labels;
    std::size_t d = s.coactions[i].cols();
    for (std::size_t a = 0; a < d; ++a) labels.push_back("s" + std::to_string(i) + (d > 1 ? "_" + std::to_string(a) : ""));
    out.emplace_back(c, Side::Right, s.coactions[i], labels);
  }
  return out;
}

std::vector<Matrix> primitive_idempotents(const CoalgebraPtr& c) {
  simple_data(c);  // raises SplitnessError when some block does not split
  return dual_decomposition(*c).idempotents;
}

std::vector<std::size_t> idempotent_simple(const CoalgebraPtr& c) { return simple_data(c).simple_of; }

std::size_t simple_index(const Comodule& s) {
  if (s.side() != Side::Right) throw Error(ErrorKind::InvalidArgument, "simple_index expects a right comodule");
  auto simples = simple_comodules(s.coalgebra());
  for (std::size_t i = 0; i < simples.size(); ++i) {
    if (simples[i].dim() == s.dim() && !hom_space(simples[i], s).empty()) return i;
  }
  throw Error(ErrorKind::InvalidArgument, "comodule is not simple");
}

ComoduleMap injective_hull(const Comodule& s) {
  const CoalgebraPtr& c = s.coalgebra();
  std::size_t i = simple_index(s);
  const Matrix& e = dual_decomposition(*c).idempotents[simple_data(c).representative[i]];
  Comodule e_s = subcomodule(regular_comodule(c), image(c->right_hit(e)));
  auto homs = hom_space(s, e_s);
  if (homs.empty() || rank(homs[0]) != s.dim()) {
    throw Error(ErrorKind::InvalidStructure, "simple comodule does not embed into C <- e");
  }
  return ComoduleMap{s, e_s, homs[0]};
}

ComoduleMap projective_cover(const Comodule& s) {
  const CoalgebraPtr& c = s.coalgebra();
  std::size_t i = simple_index(s);
  const Matrix& e = dual_decomposition(*c).idempotents[simple_data(c).representative[i]];
  Comodule f_s = subcomodule(left_regular_comodule(c), image(c->left_hit(e)));
  Comodule p_s = dual_comodule(f_s);
  auto homs = hom_space(p_s, s);
  if (homs.empty() || rank(homs[0]) != s.dim()) {
    throw Error(ErrorKind::InvalidStructure, "(e -> C)^* does not cover the simple comodule");
  }
  return ComoduleMap{p_s, s, homs[0]};
}

IsoResult iso_comodules(const Comodule& m, const Comodule& n, std::uint64_t seed) {
  require_compatible(m, n, "iso_comodules");
  IsoResult out;
  Field f = m.field();
  if (m.dim() != n.dim()) {
    out.kind = IsoResult::Kind::NotIsomorphic;
    out.witness = "dimensions " + std::to_string(m.dim()) + " and " + std::to_string(n.dim());
    return out;
  }
  if (m.dim() == 0) {
    out.kind = IsoResult::Kind::Certificate;
    out.map = Matrix(f, 0, 0);
    return out;
  }
  auto homs = hom_space(m, n);
  if (homs.empty()) {
    out.kind = IsoResult::Kind::NotIsomorphic;
    out.witness = "Hom(M, N) = 0";
    return out;
  }
  std::size_t end_m = hom_space(m, m).size(), end_n = hom_space(n, n).size();
  if (end_m != homs.size() || end_n != homs.size()) {
    out.kind = IsoResult::Kind::NotIsomorphic;
    out.witness = "dim Hom(M, N) = " + std::to_string(homs.size()) + ", dim End(M) = " + std::to_string(end_m) +
                  ", dim End(N) = " + std::to_string(end_n);
    return out;
  }
  if (m.side() == Side::Right) {
    try {
      auto simples = simple_comodules(m.coalgebra());
      for (std::size_t i = 0; i < simples.size(); ++i) {
        std::size_t a = hom_space(simples[i], m).size(), b = hom_space(simples[i], n).size();
        if (a != b) {
          out.kind = IsoResult::Kind::NotIsomorphic;
          out.witness = "dim Hom(S" + std::to_string(i) + ", -): " + std::to_string(a) + " vs " + std::to_string(b);
          return out;
        }
        a = hom_space(m, simples[i]).size();
        b = hom_space(n, simples[i]).size();
        if (a != b) {
          out.kind = IsoResult::Kind::NotIsomorphic;
          out.witness = "dim Hom(-, S" + std::to_string(i) + "): " + std::to_string(a) + " vs " + std::to_string(b);
          return out;
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SplitnessError) throw;
    }
  }
  auto accept = [&](const Matrix& x) {
    if (rank(x) != m.dim()) return false;
    out.kind = IsoResult::Kind::Certificate;
    out.map = x;
    return true;
  };
  Rng rng(seed);
  for (int t = 0; t < 64; ++t) {
    Matrix x(f, n.dim(), m.dim());
    for (const auto& h : homs) x = x + rng.scalar(f, 7) * h;
    if (accept(x)) return out;
  }
  std::vector<Scalar> coeffs = {Scalar::one(f), -Scalar::one(f)};
  if (characteristic(f) != 2 && characteristic(f) != 3) coeffs.push_back(Scalar::from_int(f, 2));
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (accept(homs[i])) return out;
    for (std::size_t j = i + 1; j < homs.size(); ++j)
      for (const auto& c : coeffs)
        if (accept(homs[i] + c * homs[j])) return out;
  }
  out.kind = IsoResult::Kind::Undecided;
  out.witness = "no invertible element found in Hom(M, N) of dimension " + std::to_string(homs.size());
  return out;
}

CoHom cohom(const Comodule& x0, const Comodule& y0) {
  require_compatible(x0, y0, "cohom");
  Comodule x = x0.side() == Side::Right ? x0 : flip_side(x0);
  Comodule y = y0.side() == Side::Right ? y0 : flip_side(y0);
  Field f = x.field();
  CoHom out;
  out.hom_basis = hom_space(y0, x0);
  out.dim = out.hom_basis.size();
  std::size_t dx = x.dim(), dy = y.dim(), n = x.coalgebra()->dim();
  // X^* (x)_{C*} Y: quotient of X^* (x) Y by xi.f (x) y - xi (x) f -> y,
  // with <xi.f, x> = <xi, f -> x>.
  Matrix rel(f, dx * dy, 0);
  Matrix ix = Matrix::identity(f, dx), iy = Matrix::identity(f, dy);
  for (std::size_t k = 0; k < n; ++k) {
    rel = hcat(rel, kron(x.action(k).transpose(), iy) - kron(ix, y.action(k)));
  }
  out.tensor_dim = dx * dy - rank(rel);
  out.universal = Matrix(f, out.dim * dx, dy);
  for (std::size_t i = 0; i < out.dim; ++i)
    for (std::size_t r = 0; r < dx; ++r)
      for (std::size_t c = 0; c < dy; ++c) out.universal(i * dx + r, c) = out.hom_basis[i](r, c);
  return out;
}

}  // namespace nkwb
