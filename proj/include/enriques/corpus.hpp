#pragma once

#include "enriques/lattice.hpp"

#include <vector>

namespace enriques::corpus {

// The 50-class benchmark corpus: the first 30 classes of the [0,2]^10 grid
// in lexicographic order with positive square, followed by 20 fixed-seed
// random classes with coordinates in [0,3] and square in (0, 60]. All
// classes are effective with square at most 60. Deterministic.
std::vector<NumClass> phi_corpus();

// All classes with coordinates in [0, 3] and square in (0, max_square];
// the property-test corpus for the length lemmas.
std::vector<NumClass> grid_corpus(const Int& max_square);

} // namespace enriques::corpus
