#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nkwb/comodule.hpp"

namespace nkwb {

/// N^l(M) = Hom^C(C, M) with (f . F)(c) = F(c <- f), turned into a right
/// comodule through f -> m = m_0 f(m_1). Defined for right comodules.
struct LeftNakayama {
  Comodule value;
  std::vector<Matrix> basis;  // colinear maps C -> M (dim M x dim C)
  Matrix stacked;             // column t = basis[t] flattened row-major
};
LeftNakayama nakayama_left_data(const Comodule& m);
Comodule nakayama_left(const Comodule& m);
/// N^l(f) : F -> f F in the chosen bases.
Matrix nakayama_left_map(const LeftNakayama& source, const LeftNakayama& target, const Matrix& f);

/// N^r(M) = C (x)_{C*} M: the quotient of C (x) M (index c * dim M + m) by
/// (c <- f) (x) m - c (x) (f -> m), with coaction c (x) m -> (c_1 (x) m) (x) c_2.
struct RightNakayama {
  Comodule value;
  Subspace relations;
  Cokernel quotient;
};
RightNakayama nakayama_right_data(const Comodule& m);
Comodule nakayama_right(const Comodule& m);
/// N^r(f) = [id (x) f].
Matrix nakayama_right_map(const RightNakayama& source, const RightNakayama& target, const Matrix& f);

/// Unit u_M(m)(c) = c (x) m and counit e_M(c (x) xi) = xi(c) of N^r -| N^l,
/// with both triangle identities checked exactly.
struct AdjunctionReport {
  Matrix unit;    // M -> N^l N^r M
  Matrix counit;  // N^r N^l M -> M
  AxiomCheck unit_colinear{"unit colinear", true, {}};
  AxiomCheck counit_colinear{"counit colinear", true, {}};
  AxiomCheck right_triangle{"e_{N^r M} . N^r(u_M) = id", true, {}};
  AxiomCheck left_triangle{"N^l(e_M) . u_{N^l M} = id", true, {}};
  bool ok() const { return unit_colinear.ok && counit_colinear.ok && right_triangle.ok && left_triangle.ok; }
};
AdjunctionReport adjunction(const Comodule& m);

/// Bilinear forms beta(x, y) = x^T B y with beta(x <- f, y) = beta(x, f -> y).
bool is_balanced(const Coalgebra& c, const Matrix& b);
std::vector<Matrix> balanced_form_space(const Coalgebra& c);

struct PairingResult {
  enum class Kind { Found, NoneExists };
  Kind kind = Kind::NoneExists;
  Matrix form;                 // when found
  std::size_t space_dim = 0;   // dimension of the balanced form space
  std::string certificate;     // how the form was found or why none exists
  bool found() const { return kind == Kind::Found; }
};
/// Throws DegenerateSearchInconclusive when no form was found and the
/// absence cannot be certified.
PairingResult frobenius_pairing(const CoalgebraPtr& c, std::uint64_t seed = 0);

/// nu = (beta^l)^{-1} beta^r, i.e. beta(y, x) = beta(nu(x), y), with the
/// automorphism axioms and beta(x_1, y) x_2 = nu(y_1) beta(x, y_2) checked.
struct NakayamaAutomorphism {
  Matrix nu;
  Matrix form;
  std::vector<AxiomCheck> checks;
  bool ok() const;
};
NakayamaAutomorphism nakayama_automorphism(const Coalgebra& c, const Matrix& form);

/// Empty when phi is a coalgebra map C -> C, otherwise the failing identity.
std::string coalgebra_map_defect(const Coalgebra& c, const Matrix& phi);
/// M^(phi): coaction followed by phi on the coalgebra factor.
Comodule twist_comodule(const Comodule& m, const Matrix& phi);
/// The iso N^r(M) -> M^(nu), c (x) m -> m_0 beta(c, m_1).
Matrix nakayama_twist_iso(const RightNakayama& nr, const Comodule& m, const Matrix& form);

struct CoinnerResult {
  enum class Kind { Inner, NotCoinner, Undecided };
  Kind kind = Kind::Undecided;
  Matrix alpha;  // phi(c) = alpha -> c <- alpha^{-1}
  std::string witness;
};
/// Solves phi(c) <- alpha = alpha -> c and looks for an invertible solution.
CoinnerResult coinner_test(const CoalgebraPtr& c, const Matrix& phi, std::uint64_t seed = 0);

struct Certified {
  std::string claim;
  IsoResult result;
};

struct ClassFlag {
  bool value = false;
  bool decided = true;
  std::string evidence;
};

struct PermutationEntry {
  std::size_t simple = 0;
  std::size_t left_image = 0;   // N^l(S_i) = S_{left_image}
  std::size_t right_image = 0;  // N^r(S_i) = S_{right_image}
  std::vector<Certified> certificates;
};

struct NakayamaPermutation {
  std::vector<std::size_t> perm;
  std::vector<PermutationEntry> entries;
  bool certified() const;
};
/// Throws NotQcF when N^l does not permute the simples.
NakayamaPermutation nakayama_permutation(const CoalgebraPtr& c, std::uint64_t seed = 0);

struct ClassificationReport {
  ClassFlag semiperfect, qcf, cofrobenius, symmetric;
  bool cosemisimple = false;
  std::vector<Certified> certificates;
  std::vector<std::string> notes;
  bool consistent() const;  // symmetric => coFrobenius => QcF => semiperfect
  bool conclusive() const;
};
ClassificationReport classify(const CoalgebraPtr& c, std::uint64_t seed = 0);

}  // namespace nkwb
