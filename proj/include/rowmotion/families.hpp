#pragma once

#include "rowmotion/poset.hpp"

namespace rowmotion {

/// The zigzag (fence) poset on a1..an: a_{2i-1} ⋖ a_{2i} and a_{2i+1} ⋖ a_{2i}.
/// Odd-indexed elements have rank 0. Throws Error if n < 1.
PosetPtr zigzag(int n);

/// [a]×[b] with elements "(i,j)"; (i,j) ⋖ (i+1,j) and (i,j) ⋖ (i,j+1).
PosetPtr chain_product(int a, int b);

/// Positive root poset of type A_n: roots e_i - e_j (i < j) ordered by
/// interval containment. Ids are letters a, b, ..., z, aa, ab, ... assigned
/// by rank, then left to right, so root_poset_A(3) is a,b,c | d,e | f.
PosetPtr root_poset_A(int n);

/// Chain x1 ⋖ x2 ⋖ ... ⋖ xn.
PosetPtr chain(int n);

/// n pairwise incomparable elements x1..xn.
PosetPtr antichain(int n);

/// Bijective base-26 letter name: 0 -> a, 25 -> z, 26 -> aa.
std::string letter_name(std::size_t k);

}  // namespace rowmotion
