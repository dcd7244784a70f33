#pragma once

#include <string>
#include <vector>

#include "singgraph/gen.hpp"
#include "singgraph/graph.hpp"

namespace sg::test {

struct CorpusEntry {
  std::string name;
  DualGraph g;
};

// A1..A9, D4..D9, E6, E7, E8.
std::vector<CorpusEntry> ade_graphs(int max_vertices = 9);

// Every catalog class instantiated at every parameter choice with core size
// <= max_core, each with two attachment-weight variants: all -3, and "deep"
// weights chosen so every attached curve meets the template cycle strictly
// negatively. Only negative definite results are kept (a -3 attachment on a
// high plateau can leave the class).
struct CatalogEntry {
  std::string name;
  ConfigClass cls;
  std::vector<long long> attachment_weights;
  DualGraph g;
};
std::vector<CatalogEntry> catalog_instantiations(int max_core = 9);

std::vector<CorpusEntry> random_trees(int count, int max_vertices,
                                      unsigned long long seed);

// ADE + catalog instantiations + 200 random negative definite trees with
// <= 9 vertices; what the acceptance criteria call "the corpus".
std::vector<CorpusEntry> full_corpus();

}  // namespace sg::test
