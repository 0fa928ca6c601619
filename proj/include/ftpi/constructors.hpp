#pragma once

#include <string>

#include "ftpi/group.hpp"
#include "ftpi/matgroup.hpp"

namespace ftpi {

enum class StandardKind { Sym, Alt, Cyclic, Dihedral };
PermGroup standard_group(StandardKind kind, int n);

enum class ProjVariant { PSL, PGL, PSigmaL, PGammaL, M10 };

// Permutation group on the q+1 points of PG(1,q). PSL/PGL come from
// transvections and a diagonal twist; the Sigma/Gamma variants adjoin the
// Frobenius map. M10 (q=9 only) is the index-2 subgroup of PGammaL(2,9) over
// PSL(2,9) other than PGL(2,9) and PSigmaL(2,9).
PermGroup projective_line_group(int q, ProjVariant variant);

// induced action on k-subsets (lexicographically ordered)
PermGroup action_on_k_subsets(const PermGroup& g, int k, long long max_degree = 100000);

// generator matrices of SL(n,q): elementary transvection plus a cyclic
// permutation-style matrix (validated in tests by order)
std::vector<Mat> sl_generators(int n, int q);

// all symplectic transvections x -> x + B(x,v) v for the standard alternating
// form over GF(2); they generate Sp(n,2)
std::vector<Mat> sp2_transvections(int n);

// GammaL extension: the Frobenius permutation of a point space
Perm frobenius_on_space(MatSpace space, int q, int n);

}  // namespace ftpi
