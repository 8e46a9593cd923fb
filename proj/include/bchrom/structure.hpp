#pragma once

#include <map>
#include <string>
#include <vector>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Raised when an operation's structural precondition does not hold.
/// `recognizer()` names the check that failed ("connected", "claw_free", ...).
class PreconditionError : public GraphError {
 public:
  PreconditionError(std::string recognizer, const std::string& what)
      : GraphError(what), recognizer_(std::move(recognizer)) {}
  const std::string& recognizer() const { return recognizer_; }

 private:
  std::string recognizer_;
};

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_tree(const Graph& g);

/// Biconnected components as sorted vertex sets. Every edge lies in exactly
/// one block; isolated vertices belong to no block. Blocks are listed in
/// order of their smallest vertex, ties by the next vertex.
std::vector<std::vector<VertexId>> blocks(const Graph& g);

bool is_block_graph(const Graph& g);

/// No induced K_{1,3}. Checks every neighbor triple of every vertex.
bool is_claw_free(const Graph& g);

/// Correspondence between the edges of a root graph and the vertices of its
/// line graph. backward[x] is the edge represented by line-graph vertex x.
struct LineGraphMap {
  std::map<EdgeId, VertexId> forward;
  std::vector<EdgeId> backward;
};

struct LineGraph {
  Graph graph;
  LineGraphMap map;
};

/// L(t): one vertex per edge of t, in edge order; two are adjacent iff the
/// edges share an endpoint. Throws GraphError on an edgeless input.
LineGraph line_graph(const Graph& t);

struct RootTree {
  Tree tree;
  LineGraphMap map;  // vertex x of the input <-> edge map.backward[x] of tree
};

/// Recover the tree whose line graph is g, vertex-for-vertex.
///
/// Tree vertices are the blocks of g (in blocks() order) followed by one leaf
/// per vertex lying in a single block (in vertex order). Vertex x of g becomes
/// the tree edge joining the blocks containing x, or joining its only block to
/// its own leaf. K1 maps to the single edge 0-1.
///
/// Throws PreconditionError unless g is connected, claw-free and a block graph.
RootTree root_tree(const Graph& g);

/// True iff line_graph(t) is g after renaming each edge e of t to the g-vertex
/// `map.forward[e]`.
bool reproduces_line_graph(const Graph& g, const Tree& t, const LineGraphMap& map);

}  // namespace bchrom
