#pragma once

// Independent reference computations used only by tests.  None of these call
// the library routine they are compared against.

#include <cstddef>
#include <vector>

#include "vcactus/cartan.hpp"
#include "vcactus/folding.hpp"

namespace oracle {

// All nonempty subsets of {1..rank} whose induced Cartan graph is connected,
// by exhaustive scan with a depth-first search.
std::vector<vcactus::NodeSet> connected_subsets_scan(const vcactus::CartanMatrix& a);

// Full root system as the W-orbit of the simple roots (weight coordinates),
// closing under all simple reflections without any positivity filter.
std::size_t root_count(const vcactus::CartanMatrix& a);

// w_0^J applied via a reduced word built greedily from the largest node down.
vcactus::WeightVec w0_largest_first(const vcactus::CartanMatrix& a, vcactus::NodeSet J,
                                    const vcactus::WeightVec& mu);

// Number of paths reachable from the straight path by root_f alone.
std::size_t f_closure_size(vcactus::DynkinType t, const vcactus::WeightVec& lambda);

// Smallest positive integer gamma (entries up to `bound`) satisfying the root
// identity psi(alpha_i) = gamma_i sum_{j in sigma(i)} alpha~_j, by search.
std::vector<long> gamma_search(const vcactus::FoldingPair& F, long bound);

}  // namespace oracle
