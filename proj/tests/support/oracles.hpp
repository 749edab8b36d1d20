#pragma once

// Independent reference implementations used only by the tests. Nothing
// here shares code with the routines it checks beyond the F2 matrix type.

#include <cstdint>
#include <random>
#include <vector>

#include "grcat/catspec.hpp"
#include "grcat/chain.hpp"
#include "grcat/generator.hpp"

namespace grcat::oracle {

/// Sum of 2^(6 - a) over the chain: an exact integer encoding of
/// sum 2^-a for chains with elements <= 6.
std::uint64_t dyadic(const Chain& c);

/// Every chain with elements in 1..max_elem and at most max_len elements.
std::vector<Chain> all_chains(int max_elem, int max_len);

/// dim Hom(v, w) by counting every tuple of vertex matrices that commutes
/// with the arrows.
int hom_dim_bruteforce(const gen::MatrixRep& v, const gen::MatrixRep& w);

/// dim Ext^1(c, a) as log2 of the number of equivalence classes of short
/// exact sequences 0 -> a -> e -> c -> 0, all enumerated explicitly.
int ext_dim_bruteforce(const gen::MatrixRep& c, const gen::MatrixRep& a);

/// A random spec that passes validate_spec: up to max_n objects, lengths in
/// 1..6, inflations only from shorter to longer objects.
CategorySpec random_spec(std::mt19937_64& rng, std::size_t max_n = 10);

/// Final-example ids in terms of the intervals of A_3.
const std::vector<std::pair<std::string, std::string>>& final_example_renaming();

// Designated negative controls, one per suite.
/// X (length 2) >-> Y (length 1) and W (1) >-> Z (2): Y and Z share the
/// measure {1,2} with different lengths.
CategorySpec corrupted_gr_spec();
/// Final example with the measures of P1m1 and S1m1 exchanged.
std::vector<Chain> swapped_final_measures(const CategorySpec& final_example);
/// Final example plus S1m1 >-> P2 + S2 + S2.
CategorySpec main_property_control();
/// mod kA_2 with the conflation ([2,2]^2, [1,2] + [2,2], [1,1]) replaced by
/// ([2,2]^2, [1,2], [1,1]).
CategorySpec ext_bound_control();
/// S (length 1), M (length 2), Hom(M, S) != 0, no conflations.
CategorySpec small_lemmas_control();

}  // namespace grcat::oracle
