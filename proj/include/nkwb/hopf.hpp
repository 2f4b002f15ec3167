#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nkwb/comodule.hpp"
#include "nkwb/nakayama.hpp"

namespace nkwb {

/// Finite-dimensional Hopf algebra: a coalgebra together with a
/// multiplication (dim x dim^2, columns b_i (x) b_j -> b_i b_j), a unit
/// column and an antipode matrix.
class HopfAlgebra {
 public:
  HopfAlgebra(CoalgebraPtr coalgebra, Matrix mult, Matrix unit, Matrix antipode);

  const CoalgebraPtr& coalgebra() const { return coalgebra_; }
  Field field() const { return coalgebra_->field(); }
  std::size_t dim() const { return coalgebra_->dim(); }
  const std::vector<std::string>& labels() const { return coalgebra_->labels(); }
  const Algebra& algebra() const { return algebra_; }
  const Matrix& mult() const { return algebra_.mult(); }
  const Matrix& unit() const { return algebra_.unit(); }
  const Matrix& antipode() const { return antipode_; }
  /// Throws InvalidStructure when S is singular.
  const Matrix& antipode_inverse() const;

  Matrix basis(std::size_t i) const { return coalgebra_->basis(i); }
  Matrix product(const Matrix& x, const Matrix& y) const { return algebra_.product(x, y); }
  Matrix left_mul(const Matrix& x) const { return algebra_.left_mul(x); }
  Matrix right_mul(const Matrix& y) const { return algebra_.right_mul(y); }
  /// Matrix of m : H (x) H -> H.
  const Matrix& mult_map() const { return algebra_.mult(); }
  const Matrix& comul() const { return coalgebra_->comul(); }
  const Matrix& counit() const { return coalgebra_->counit(); }

 private:
  CoalgebraPtr coalgebra_;
  Algebra algebra_;
  Matrix antipode_;
  std::shared_ptr<std::optional<Matrix>> antipode_inverse_;
  std::shared_ptr<std::once_flag> antipode_once_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct HopfReport {
  std::vector<AxiomCheck> checks;
  /// Multiplicative orders of S^2 and S^4 (0 when above the search bound).
  std::size_t order_s2 = 0;
  std::size_t order_s4 = 0;
  bool ok() const;
};
HopfReport check_hopf(const HopfAlgebra& h);

/// S^k for any integer k.
Matrix antipode_power(const HopfAlgebra& h, int k);

// Cointegrals and modular data. Functionals on H are columns; H acts on H*
// by (h -> f)(x) = f(x h) and (f <- h)(x) = f(h x), and H* acts on H by
// a -> h = h_1 a(h_2) and h <- a = a(h_1) h_2.

/// Left cointegrals h_1 lambda(h_2) = lambda(h) 1. The basis vector is
/// normalized so that its first nonzero coordinate is 1.
std::vector<Matrix> cointegral_space(const HopfAlgebra& h);
/// The normalized left cointegral; throws DimensionNotOne.
Matrix cointegral(const HopfAlgebra& h);

struct ModularData {
  Matrix lambda;
  Matrix g;          // distinguished grouplike: <lambda, h_1> h_2 = lambda(h) g
  Matrix alpha;      // modular function alpha = epsilon . chi (column)
  Matrix alpha_inv;  // alpha . S
  Matrix chi;        // h -> lambda = lambda <- chi(h)
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
/// Throws NotGrouplike or InconsistentChi.
ModularData modular_data(const HopfAlgebra& h, const Matrix& lambda);
ModularData modular_data(const HopfAlgebra& h);

/// S^4(h) = g^{-1} (alpha -> h <- alpha^{-1}) g on every basis element.
struct RadfordReport {
  Matrix s4;
  Matrix rhs;
  std::vector<std::string> residuals;  // one entry per failing basis element
  bool s4_is_identity = false;
  bool ok() const { return residuals.empty(); }
};
RadfordReport radford_s4_check(const HopfAlgebra& h, const ModularData& m);

/// beta(a, b) = lambda(a S(b)) with its Nakayama automorphism compared to
/// h -> g S^2(h).
struct CointegralPairing {
  Matrix form;
  Matrix nu;
  Matrix expected_nu;  // left multiplication by g composed with S^2
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
CointegralPairing frobenius_pairing_from_cointegral(const HopfAlgebra& h, const ModularData& m);

// Comodules over H. All are right comodules over h.coalgebra().

Comodule comodule_unit(const HopfAlgebra& h);
/// One-dimensional comodule k_g for a grouplike g.
Comodule grouplike_comodule(const HopfAlgebra& h, const Matrix& g, const std::string& label = "1");
/// x (x) y -> x_0 (x) y_0 (x) x_1 y_1, basis index a * dim Y + b.
Comodule comodule_tensor(const HopfAlgebra& h, const Comodule& x, const Comodule& y);
/// X^v on the dual basis: <x*_0, x> x*_1 = <x*, x_0> S(x_1).
Comodule left_dual(const HopfAlgebra& h, const Comodule& x);
/// ^vX on the dual basis, built with S^{-1}.
Comodule right_dual(const HopfAlgebra& h, const Comodule& x);
/// (X^v)^v; the canonical map phi_X is the identity in these coordinates.
Comodule double_dual(const HopfAlgebra& h, const Comodule& x);
/// ^vv X.
Comodule double_right_dual(const HopfAlgebra& h, const Comodule& x);
/// Coaction followed by S^k on the H factor.
Comodule antipode_twist(const HopfAlgebra& h, const Comodule& x, int k);

/// ev, coev colinearity and the triangle identities for both duals, plus
/// (X (x) Y)^v = Y^v (x) X^v through the flip of the dual bases.
struct RigidityReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
RigidityReport check_rigidity(const HopfAlgebra& h, const Comodule& x, const Comodule& y);

/// Comodules used by the batteries: 1, the simples, the grouplike
/// comodules and E(1).
std::vector<Comodule> builtin_comodule_family(const HopfAlgebra& h);

/// g_C = N^r(1) with kappa: [h (x) 1] -> lambda(h) g.
struct ModularObject {
  RightNakayama nr;
  Comodule gc;      // N^r(1)
  Comodule kg;      // k_g for the distinguished grouplike
  Matrix kappa;     // 1 x 1
  bool unimodular = false;
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
ModularObject modular_object(const HopfAlgebra& h, const ModularData& m);

/// Psi^l_{X,Y}: N^r(X (x) Y) -> ^vvX (x) N^r(Y) and
/// Psi^r_{X,Y}: N^r(X (x) Y) -> N^r(X) (x) Y^vv.
struct PsiMaps {
  RightNakayama source;      // N^r(X (x) Y)
  RightNakayama nx, ny;      // N^r(X), N^r(Y)
  Comodule left_target;      // ^vvX (x) N^r(Y)
  Comodule right_target;     // N^r(X) (x) Y^vv
  Matrix left, right;
  Matrix left_inverse_formula;  // S^{-2}(x_1) h (x) (x_0 (x) y)
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
PsiMaps psi_maps(const HopfAlgebra& h, const Comodule& x, const Comodule& y);

/// N^r(X) = g (x) X^vv and N^r(X) = ^vvX (x) g through Psi with Y or X = 1;
/// for simple X also E(S) = P(g (x) S^vv) and P(S) = E(g^v (x) ^vvS).
struct NakayamaDualityReport {
  std::vector<Certified> certificates;
  bool certified() const;
};
NakayamaDualityReport naka_vs_dual(const HopfAlgebra& h, const ModularObject& g, const Comodule& x,
                                   bool simple, std::uint64_t seed = 0);

/// r_X : X (x) g_C -> g_C (x) X^vvvv, computed from the explicit formula,
/// from the Psi maps and by transport of r' through kappa.
struct RadfordIso {
  Matrix explicit_form;
  Matrix psi_form;
  Matrix transported;
  Matrix r_prime;  // X (x) k g -> k g (x) X^vvvv
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
RadfordIso radford_isomorphism(const HopfAlgebra& h, const ModularData& m, const ModularObject& g,
                               const Comodule& x);
/// r_{X (x) Y} = (r_X (x) id)(id (x) r_Y).
AxiomCheck radford_multiplicativity(const HopfAlgebra& h, const ModularData& m, const ModularObject& g,
                                    const Comodule& x, const Comodule& y);

// Yetter-Drinfeld modules over the twisted bimodule coalgebra C(a, b) whose
// H-bimodule structure is h > x < h' = S^{2b}(h) x S^{2a}(h').

struct YDModule {
  Comodule coaction;            // left comodule over h.coalgebra()
  std::vector<Matrix> action;   // action[i] = action of the basis element b_i
};
/// k.lambda with coaction g and action alpha.
YDModule cointegral_yd(const HopfAlgebra& h, const ModularData& m);
/// Module and comodule axioms and
/// delta(a v) = (a_(-1) > v_(-1) < S(a_(1))) (x) a_(0) v_(0) on all basis pairs.
struct YDReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
YDReport yd_check(const HopfAlgebra& h, const YDModule& v, int a, int b);

/// Object of the twisted Hopf module category: left C(a,b)-comodule, right
/// H-comodule, H-bimodule.
struct HopfModule {
  Comodule left_coaction;
  Comodule right_coaction;
  std::vector<Matrix> left_action;
  std::vector<Matrix> right_action;
};
std::vector<AxiomCheck> check_hopf_module(const HopfAlgebra& h, const HopfModule& m, int a, int b);
/// F(V) = V (x) H.
HopfModule hopf_module_from_yd(const HopfAlgebra& h, const YDModule& v, int a);
/// I(M) = {m : delta^r(m) = m (x) 1} with a |> m = a_0 m S(a_1); `inclusion`
/// receives the basis of I(M) in M.
YDModule invariants(const HopfAlgebra& h, const HopfModule& m, Matrix* inclusion = nullptr);
/// H* with f_0 <xi, f_1> = xi * f, <xi, f_-1> f_0 = f * xi,
/// h . f = f <- S^{-1}(h) and f . h = S(h) -> f.
HopfModule dual_hopf_module(const HopfAlgebra& h);

struct HopfModuleEquivalence {
  HopfModule fv;               // F(V)
  Matrix unit;                 // V -> I F(V), v -> v (x) 1
  Matrix theta;                // F I(H*) -> H*, lambda (x) h -> lambda . h
  Matrix invariant_lambda;     // I(H*) computed inside H*
  Matrix yd_g, yd_alpha;       // coaction and action of I(H*) read off
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
HopfModuleEquivalence hopf_module_equivalence(const HopfAlgebra& h, const YDModule& v, const ModularData& m,
                                              int a = 1, int b = -1);

}  // namespace nkwb
