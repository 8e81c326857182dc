#pragma once

#include <string>
#include <vector>

#include "kirch/graph.hpp"

namespace kirch::testing {

struct CorpusEntry {
    std::string name;
    Graph graph;
};

// fixed family sweep, every graph on at most 40 vertices; built once
const std::vector<CorpusEntry>& family_corpus();

// deterministic random connected graphs (fixed seed, spanning tree + extras)
std::vector<CorpusEntry> random_corpus(int count);

// Kneser graph on the 2-subsets of a 5-set: 10 vertices, 3-regular,
// distance-regular of diameter 2
Graph petersen();

} // namespace kirch::testing
