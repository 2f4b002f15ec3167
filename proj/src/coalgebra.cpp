#include "nkwb/coalgebra.hpp"

#include <sstream>

#include "cache.hpp"

namespace nkwb {

Coalgebra::Coalgebra(Field f, std::vector<std::string> labels, Matrix comul, Matrix counit)
    : field_(f),
      dim_(counit.cols()),
      labels_(std::move(labels)),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      cache_(std::make_shared<CoalgebraCache>()) {
  if (counit_.rows() != 1 || comul_.rows() != dim_ * dim_ || comul_.cols() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "coalgebra structure constants have the wrong shape");
  }
  if ((dim_ && (comul_.field() != f || counit_.field() != f))) {
    throw Error(ErrorKind::FieldMismatch, "coalgebra data over a different field");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "wrong number of basis labels");
}

Matrix Coalgebra::basis(std::size_t i) const {
  Matrix v(field_, dim_, 1);
  v(i, 0) = Scalar::one(field_);
  return v;
}

Matrix Coalgebra::dual_basis(std::size_t i) const { return basis(i); }

Matrix Coalgebra::counit_functional() const { return counit_.transpose(); }

const Algebra& Coalgebra::dual_algebra() const {
  return cache_->dual.get([&] { return Algebra(field_, comul_.transpose(), counit_functional()); });
}

Matrix Coalgebra::convolve(const Matrix& f, const Matrix& g) const { return dual_algebra().product(f, g); }

Matrix Coalgebra::left_hit(const Matrix& f) const {
  // (f -> b_i) = sum_{j,k} Delta[i][j][k] f_k b_j
  Matrix m(field_, dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (f(k, 0).is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const Scalar& d = comul_(j * dim_ + k, i);
        if (!d.is_zero()) m(j, i) += d * f(k, 0);
      }
  }
  return m;
}

Matrix Coalgebra::right_hit(const Matrix& f) const {
  // (b_i <- f) = sum_{j,k} Delta[i][j][k] f_j b_k
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (f(j, 0).is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& d = comul_(j * dim_ + k, i);
        if (!d.is_zero()) m(k, i) += d * f(j, 0);
      }
  }
  return m;
}

const Matrix& Coalgebra::left_hit_basis(std::size_t k) const {
  return cache_->left_hits.get([&] {
    std::vector<Matrix> v;
    for (std::size_t i = 0; i < dim_; ++i) v.push_back(left_hit(dual_basis(i)));
    return v;
  })[k];
}

const Matrix& Coalgebra::right_hit_basis(std::size_t k) const {
  return cache_->right_hits.get([&] {
    std::vector<Matrix> v;
    for (std::size_t i = 0; i < dim_; ++i) v.push_back(right_hit(dual_basis(i)));
    return v;
  })[k];
}

bool Coalgebra::same_structure(const Coalgebra& other) const {
  if (this == &other) return true;
  return field_ == other.field_ && dim_ == other.dim_ && comul_ == other.comul_ && counit_ == other.counit_;
}

CoalgebraPtr make_coalgebra(Field f, std::vector<std::string> labels, Matrix comul, Matrix counit) {
  return std::make_shared<const Coalgebra>(f, std::move(labels), std::move(comul), std::move(counit));
}

CoalgebraPtr make_coalgebra(Field f, std::vector<std::string> labels, const std::vector<ComulEntry>& comul,
                            const std::vector<Scalar>& counit) {
  std::size_t n = counit.size();
  Matrix d(f, n * n, n);
  for (const auto& e : comul) {
    if (e.i >= n || e.j >= n || e.k >= n) throw Error(ErrorKind::InvalidStructure, "comultiplication index out of range");
    d(e.j * n + e.k, e.i) += e.value;
  }
  return make_coalgebra(f, std::move(labels), d, Matrix::row(f, counit));
}

bool same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

std::string format_element(const Matrix& v, const std::vector<std::string>& labels, std::size_t factors) {
  std::size_t n = labels.size();
  std::ostringstream out;
  bool first = true;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Scalar& x = v(r, 0);
    if (x.is_zero()) continue;
    std::string term;
    std::size_t idx = r;
    std::vector<std::string> parts(factors);
    for (std::size_t f = factors; f-- > 0;) {
      parts[f] = n ? labels[idx % n] : "?";
      idx = n ? idx / n : 0;
    }
    for (std::size_t f = 0; f < factors; ++f) term += (f ? "⊗" : "") + parts[f];
    std::string coeff = x.str();
    if (!first) out << " + ";
    if (x.is_one()) out << term;
    else out << "(" << coeff << ")" << term;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

CoalgebraReport check_coalgebra(const Coalgebra& c) {
  CoalgebraReport rep;
  Field f = c.field();
  std::size_t n = c.dim();
  Matrix id = Matrix::identity(f, n);
  Matrix left = kron(c.comul(), id) * c.comul();
  Matrix right = kron(id, c.comul()) * c.comul();
  for (std::size_t i = 0; i < n && rep.coassociativity.ok; ++i) {
    Matrix l = left.col(i), r = right.col(i);
    if (l != r) {
      rep.coassociativity.ok = false;
      rep.coassociativity.witness = "at " + c.labels()[i] + ": (Δ⊗id)Δ = " + format_element(l, c.labels(), 3) +
                                    ", (id⊗Δ)Δ = " + format_element(r, c.labels(), 3);
    }
  }
  Matrix el = kron(c.counit(), id) * c.comul();
  Matrix er = kron(id, c.counit()) * c.comul();
  for (std::size_t i = 0; i < n && rep.counit.ok; ++i) {
    Matrix l = el.col(i), r = er.col(i), b = c.basis(i);
    if (l != b) {
      rep.counit.ok = false;
      rep.counit.witness = "at " + c.labels()[i] + ": (ε⊗id)Δ = " + format_element(l, c.labels());
    } else if (r != b) {
      rep.counit.ok = false;
      rep.counit.witness = "at " + c.labels()[i] + ": (id⊗ε)Δ = " + format_element(r, c.labels());
    }
  }
  return rep;
}

CoalgebraPtr cop(const CoalgebraPtr& c) {
  return c->cache().opposite.get([&] {
    std::size_t n = c->dim();
    return make_coalgebra(c->field(), c->labels(), swap_tensor(c->field(), n, n) * c->comul(), c->counit());
  });
}

CoalgebraPtr quiver_coalgebra(Field f, const Quiver& q) {
  std::size_t nv = q.vertices.size();
  std::vector<std::string> labels = q.vertices;
  for (const auto& a : q.arrows) {
    if (a.source >= nv || a.target >= nv) throw Error(ErrorKind::InvalidStructure, "arrow " + a.label + " has an invalid endpoint");
    labels.push_back(a.label);
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw Error(ErrorKind::InvalidStructure, "duplicate quiver label " + labels[i]);
  std::vector<ComulEntry> entries;
  std::vector<Scalar> counit(labels.size(), Scalar::zero(f));
  Scalar one = Scalar::one(f);
  for (std::size_t v = 0; v < nv; ++v) {
    entries.push_back({v, v, v, one});
    counit[v] = one;
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    std::size_t idx = nv + a;
    entries.push_back({idx, q.arrows[a].source, idx, one});
    entries.push_back({idx, idx, q.arrows[a].target, one});
  }
  return make_coalgebra(f, labels, entries, counit);
}

const DualDecomposition& dual_decomposition(const Coalgebra& c) {
  return c.cache().decomposition.get([&] {
    DualDecomposition d;
    const Algebra& a = c.dual_algebra();
    d.radical = radical(a);
    d.quotient = quotient(d.radical);
    d.semisimple = quotient_algebra(a, d.quotient);
    Rng rng(0);
    d.splitting = split_semisimple(d.semisimple, rng);
    std::vector<Matrix> all = d.splitting.idempotents;
    all.insert(all.end(), d.splitting.unsplit.begin(), d.splitting.unsplit.end());
    d.idempotents = lift_idempotents(a, d.quotient, all);
    return d;
  });
}

Grouplikes grouplikes(const CoalgebraPtr& c) {
  Grouplikes out;
  const DualDecomposition& d = dual_decomposition(*c);
  out.search_incomplete = !d.splitting.unsplit.empty();
  const Algebra& b = d.semisimple;
  Field f = c->field();
  std::vector<std::size_t> block_size(d.splitting.blocks, 0);
  for (std::size_t blk : d.splitting.block) ++block_size[blk];
  for (std::size_t i = 0; i < d.splitting.idempotents.size(); ++i) {
    if (block_size[d.splitting.block[i]] != 1) continue;
    const Matrix& e = d.splitting.idempotents[i];
    // The block is k e; the character is x -> coefficient of x e on e.
    std::size_t pivot = 0;
    while (e(pivot, 0).is_zero()) ++pivot;
    Matrix g(f, c->dim(), 1);
    for (std::size_t k = 0; k < c->dim(); ++k) {
      Matrix xe = b.product(d.quotient.projection * c->dual_basis(k), e);
      g(k, 0) = xe(pivot, 0) / e(pivot, 0);
    }
    if (kron(g, g) != c->comul() * g || !(c->counit() * g)(0, 0).is_one()) {
      throw Error(ErrorKind::InvalidStructure, "character did not produce a grouplike element");
    }
    out.elements.push_back(g);
  }
  std::sort(out.elements.begin(), out.elements.end(), [](const Matrix& x, const Matrix& y) {
    for (std::size_t r = 0; r < x.rows(); ++r) {
      if (x(r, 0) != y(r, 0)) {
        if (x(r, 0).is_zero() != y(r, 0).is_zero()) return !x(r, 0).is_zero();
        return scalar_less(x(r, 0), y(r, 0));
      }
    }
    return false;
  });
  return out;
}

}  // namespace nkwb
