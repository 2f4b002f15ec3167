#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nkwb/coalgebra.hpp"

namespace nkwb {

enum class Side { Right, Left };

struct ComoduleCache;

/// Finite-dimensional comodule with coaction coefficients rho[a][b][k]:
///   right:  delta(m_a) = sum_{b,k} rho[a][b][k] m_b (x) c_k, row index b*n + k
///   left:   delta(m_a) = sum_{b,k} rho[a][b][k] c_k (x) m_b, row index k*m + b
/// of the coaction matrix (column a). The induced C*-action matrices are
/// A_f[b][a] = sum_k f_k rho[a][b][k]: for a right comodule this is the left
/// action f -> m = m_0 f(m_1), for a left comodule the right action
/// m <- f = f(m_-1) m_0.
class Comodule {
 public:
  Comodule() = default;
  Comodule(CoalgebraPtr c, Side side, Matrix coaction, std::vector<std::string> labels = {});

  const CoalgebraPtr& coalgebra() const { return coalgebra_; }
  Field field() const { return coalgebra_->field(); }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const Matrix& coaction() const { return coaction_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Scalar rho(std::size_t a, std::size_t b, std::size_t k) const;
  /// Action matrix of the dual basis functional delta_k.
  const Matrix& action(std::size_t k) const;
  /// Action matrix of an arbitrary functional (column in C*).
  Matrix action(const Matrix& f) const;

 private:
  CoalgebraPtr coalgebra_;
  Side side_ = Side::Right;
  std::size_t dim_ = 0;
  Matrix coaction_;
  std::vector<std::string> labels_;
  std::shared_ptr<ComoduleCache> cache_;
};

/// Colinear map, matrix of size target.dim() x source.dim().
struct ComoduleMap {
  Comodule source;
  Comodule target;
  Matrix matrix;
};

struct ComoduleReport {
  AxiomCheck coassociativity{"coaction coassociativity", true, {}};
  AxiomCheck counit{"coaction counit", true, {}};
  bool ok() const { return coassociativity.ok && counit.ok; }
};
ComoduleReport check_comodule(const Comodule& m);

Comodule regular_comodule(const CoalgebraPtr& c);        // (C, Delta) on the right
Comodule left_regular_comodule(const CoalgebraPtr& c);   // (C, Delta) on the left
/// The same data seen from the other side over the opposite coalgebra.
Comodule flip_side(const Comodule& m);

bool is_colinear(const Comodule& m, const Comodule& n, const Matrix& f);
/// Basis of Hom^C(M, N) as matrices, canonical echelon order.
std::vector<Matrix> hom_space(const Comodule& m, const Comodule& n);

/// Subcomodule on a subspace (throws InvalidArgument if not invariant);
/// `inclusion` receives the basis of the subspace.
Comodule subcomodule(const Comodule& m, const Subspace& v, Matrix* inclusion = nullptr);
/// Quotient by a subcomodule; `projection` receives the quotient map.
Comodule quotient_comodule(const Comodule& m, const Subspace& v, Matrix* projection = nullptr);
Comodule direct_sum(const Comodule& a, const Comodule& b);

/// Dual comodule on the dual basis. A right comodule M gives the left
/// comodule with delta(m^b) = sum_{a,k} rho[a][b][k] c_k (x) m^a, which is
/// <m*_(0), m> m*_(-1) = <m*, m_(0)> m_(1); a left comodule gives the
/// mirrored right comodule.
Comodule dual_comodule(const Comodule& m);

/// Largest semisimple subcomodule: common kernel of the radical of C*.
Subspace socle(const Comodule& m);
/// Radical J(C*) M of the module view.
Subspace radical_of(const Comodule& m);
/// M / J(C*) M with the projection.
ComoduleMap top(const Comodule& m);

/// Pairwise non-isomorphic simple right comodules in a canonical order
/// (by the coefficient subcoalgebra). Throws SplitnessError if C*/J has a
/// block that does not split over the field.
std::vector<Comodule> simple_comodules(const CoalgebraPtr& c);
/// Orthogonal primitive idempotents of C* summing to epsilon.
std::vector<Matrix> primitive_idempotents(const CoalgebraPtr& c);
/// Simple index of each primitive idempotent (e -> S with e -> S != 0).
std::vector<std::size_t> idempotent_simple(const CoalgebraPtr& c);
/// Index of the simple comodule isomorphic to the given simple comodule.
std::size_t simple_index(const Comodule& s);

/// Embedding S -> E(S) = C <- e inside the regular comodule.
ComoduleMap injective_hull(const Comodule& s);
/// Surjection P(S) -> S with P(S) = (e -> C)^*, the dual of the injective
/// hull of the left comodule S^*.
ComoduleMap projective_cover(const Comodule& s);

struct IsoResult {
  enum class Kind { Certificate, NotIsomorphic, Undecided };
  Kind kind = Kind::Undecided;
  Matrix map;           // certificate: colinear and invertible
  std::string witness;  // distinguishing invariant, or the reason for Undecided
  bool isomorphic() const { return kind == Kind::Certificate; }
};
/// Searches Hom^C(M, N) for an invertible element: seeded random
/// combinations, then a sweep over sparse combinations.
IsoResult iso_comodules(const Comodule& m, const Comodule& n, std::uint64_t seed = 0);

struct CoHom {
  std::size_t dim = 0;              // dim Hom^C(Y, X)^*
  std::size_t tensor_dim = 0;       // dim X^* (x)_{C*} Y
  std::vector<Matrix> hom_basis;    // basis phi_i of Hom^C(Y, X)
  /// Universal map Y -> Hom^C(Y, X)^* (x) X, y -> sum_i phi^i (x) phi_i(y).
  Matrix universal;
};
CoHom cohom(const Comodule& x, const Comodule& y);

std::string side_name(Side s);

}  // namespace nkwb
