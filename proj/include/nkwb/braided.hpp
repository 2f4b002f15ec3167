#pragma once

#include <string>
#include <vector>

#include "nkwb/hopf.hpp"

namespace nkwb {

// Coquasitriangular structures. r is stored as an n x n matrix with
// r(b_i, b_j) in row i, column j.

/// The four R-form axioms and r * rbar = epsilon (x) epsilon with
/// rbar(h, k) = r(S(h), k).
std::vector<AxiomCheck> check_rform(const HopfAlgebra& h, const Matrix& r);
/// The R-form family r_t on the Sweedler algebra: r(g, g) = -1,
/// r(x, x) = r(x, gx) = t, r(gx, x) = -t, r(gx, gx) = t.
Matrix sweedler_rform(Field f, const Scalar& t);

struct BraidedData {
  Matrix r;
  Matrix rbar;
  Matrix u;      // u(h) = r(h_2, S(h_1))
  Matrix v;      // u . S
  Matrix b;      // b(h) = r(g, h)
  Matrix u_inv;  // convolution inverse of u
  Matrix alpha_from_r;  // b * u^-1 * v
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
/// Throws NotRForm with the first failing axiom.
BraidedData braided_data(const HopfAlgebra& h, const ModularData& m, const Matrix& r);

/// sigma_{X,Y}(x (x) y) = r(x_1, y_1) y_0 (x) x_0, as a map X (x) Y -> Y (x) X.
Matrix braiding(const HopfAlgebra& h, const Matrix& r, const Comodule& x, const Comodule& y);
/// Drinfeld isomorphism u_X : X -> X^vv, x -> x_0 u(x_1).
Matrix drinfeld_iso(const BraidedData& d, const Comodule& x);

struct BraidedRadford {
  Matrix from_braiding;  // (id (x) (u_{X^v}^v)^-1 u_X) sigma_{g,X}^-1
  Matrix explicit_form;
  Matrix double_braiding;  // sigma_{X,g} sigma_{g,X}
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
BraidedRadford braided_radford(const HopfAlgebra& h, const ModularData& m, const ModularObject& g,
                               const BraidedData& d, const Comodule& x);

// Cosemisimple case.

struct SemisimpleTrace {
  Matrix r_tilde;
  Matrix predicted;  // tr((phi^-1)^v) / tr(phi) . phi^vv phi
  Scalar lhs_trace, rhs_trace;
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
/// phi : X -> X^vv must be a colinear isomorphism. Throws NotSemisimple when
/// the coalgebra has a nonzero coradical complement, TraceZero when tr(phi) = 0.
SemisimpleTrace semisimple_trace_check(const HopfAlgebra& h, const ModularData& m, const ModularObject& g,
                                       const Comodule& x, const Matrix& phi);

/// For each simple S: P(S) is injective and E(S) is projective.
std::vector<AxiomCheck> projectives_are_injective(const HopfAlgebra& h);

// Pivotal structures given by a character p of H, p_X = p -> (.) : X -> X^vv.

struct SphericalReport {
  bool spherical = false;
  std::vector<AxiomCheck> pivotal;  // colinearity, monoidality, naturality
  std::vector<AxiomCheck> diagram;  // (f (x) id) p_{X^vv} p_X = r_X (id (x) f), per X
  std::vector<AxiomCheck> twist;    // theta = u^-1 p, when an R-form is supplied
  bool twist_ok = false;
  bool ok() const;
};
/// Throws NotUnimodular when g_C is not trivial and NotPivotal when p_X
/// fails colinearity, monoidality or naturality on the family.
SphericalReport sphericity_check(const HopfAlgebra& h, const ModularData& m, const ModularObject& g,
                                 const Matrix& pivot, const std::vector<Comodule>& family,
                                 const BraidedData* braided = nullptr);

}  // namespace nkwb
