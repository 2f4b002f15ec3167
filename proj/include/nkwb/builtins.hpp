#pragma once

#include <string>
#include <vector>

#include "nkwb/hopf.hpp"

namespace nkwb {

struct BuiltinObject {
  std::string name;
  CoalgebraPtr coalgebra;
  HopfPtr hopf;  // null for coalgebras without a Hopf structure
};

/// Names: k2, star:N, example0:N, mat:N, sweedler, taft:N:P,
/// group:SPEC, dualgroup:SPEC where SPEC is S3, Cn or a Cayley table file.
/// `field` overrides the default ground field (Q) where one applies.
BuiltinObject builtin(const std::string& name, Field field = nullptr);
std::vector<std::string> builtin_names();

using CayleyTable = std::vector<std::vector<std::size_t>>;
/// Cayley table file: N, then N x N entries (0-based, row = left factor).
CayleyTable read_cayley_table(const std::string& path);
CayleyTable parse_cayley_table(const std::string& text);
/// Validates the group axioms; returns the identity index.
std::size_t check_group(const CayleyTable& t);

CoalgebraPtr comatrix_coalgebra(Field f, std::size_t n);
/// Taft algebra T_N(zeta): basis g^i x^j at index j*N + i, g^N = 1, x^N = 0,
/// x g = zeta g x, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
HopfPtr taft_algebra(Field f, std::size_t n, const Scalar& zeta);
HopfPtr group_algebra(Field f, const CayleyTable& t, const std::vector<std::string>& labels);
HopfPtr dual_group_algebra(Field f, const CayleyTable& t, const std::vector<std::string>& labels);

}  // namespace nkwb
