#pragma once

#include <string>
#include <vector>

#include "einet/network.hpp"

namespace einet {

// A partition of node indices into blocks; blocks sorted internally and by
// smallest member. Valid colourings must refine input equivalence.
using Colouring = std::vector<std::vector<int>>;

Colouring trivial_colouring(int n);
Colouring normalize_colouring(Colouring c, int n);  // sorts, checks partition

// "1,2|3" with 1-based node numbers.
Colouring parse_colouring(const std::string &text, int n);
std::string colouring_to_string(const Colouring &c);

bool refines_input_classes(const EINetwork &net, const Colouring &c);

// Balance of a colouring, decided two ways that must agree: the per-block
// input-count test, and invariance of the polydiagonal under every matrix of
// the adjacency family. Throws std::invalid_argument when the colouring does
// not refine input equivalence.
bool is_balanced(const EINetwork &net, const Colouring &c);

// The two routes individually (exposed so tests can compare them).
bool is_balanced_counts(const EINetwork &net, const Colouring &c);
bool polydiagonal_invariant(const EINetwork &net, const Colouring &c);

// All balanced colourings, by brute force over partitions refining input
// equivalence (node counts here are small).
std::vector<Colouring> balanced_colourings(const EINetwork &net);

// Quotient network on the colour blocks of a balanced colouring. Blocks are
// numbered by smallest member. Throws when the colouring is unbalanced.
EINetwork quotient(const EINetwork &net, const Colouring &c);

}  // namespace einet
