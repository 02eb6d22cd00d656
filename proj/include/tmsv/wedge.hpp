#pragma once

#include <vector>

#include "tmsv/rational.hpp"

namespace tmsv {

// Basis element of Λ^p of an n-dimensional coordinate space: a strictly
// increasing index subset. The Λ^p basis is ordered lexicographically.
struct WedgeBasisIndex {
  int p = 0;
  std::vector<int> subset;
};

long long binom(int n, int k);

// All strictly increasing p-subsets of {0,..,n-1} in lexicographic order.
std::vector<std::vector<int>> increasing_subsets(int n, int p);

// Position of a strictly increasing subset in the lexicographic enumeration.
int subset_lex_rank(const std::vector<int>& s, int n);

// v ∧ u for v in R^n and u in Λ^k(R^n); result in Λ^{k+1}(R^n).
QVec wedge_vec(const QVec& v, const QVec& u, int n, int k);

// Wedge of every p-subset of the input vectors (subsets of list positions in
// lexicographic order), each expanded in the standard Λ^p basis.
std::vector<QVec> wedge_power_basis(const std::vector<QVec>& vectors, int p,
                                    int n);

// Wedge of one vector list (in the given order); coordinates in Λ^k, k =
// vectors.size().
QVec wedge_of(const std::vector<QVec>& vectors, int n);

// Contraction κ_α(ν) of ν ∈ Λ^d by the covector α ∈ Λ^p, defined by
// ⟨κ_α(ν), β⟩ = ⟨ν, α∧β⟩ for every β ∈ Λ^{d-p} covector. Throws on p > d.
QVec contract(const QVec& alpha, const QVec& nu, int n, int p, int d);

// Λ^p functorial push along a coordinate-deletion map: keep = surviving
// coordinate indices in ambient order. Monomials touching a deleted
// coordinate die; others reindex.
QVec wedge_delete_coords(const QVec& u, int n, int k,
                         const std::vector<int>& keep);

}  // namespace tmsv
