#pragma once

#include "ringlab/bitset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

// Simple undirected graph. Vertices carry external integer labels (ring
// element indices); adjacency is stored by position as bitset rows.
class NCGraph {
public:
    std::vector<int> labels; // sorted, unique
    std::vector<Bitset> adj; // adj[i] over positions

    int vcount() const { return static_cast<int>(labels.size()); }
    long long ecount() const;
    int index_of(int label) const; // -1 if absent
    bool adjacent(int i, int j) const { return adj[i].test(j); }
    int degree(int i) const { return adj[i].count(); }

    void add_edge(int i, int j) {
        adj[i].set(j);
        adj[j].set(i);
    }

    // Edges as (label,label) pairs, smaller endpoint first, sorted.
    std::vector<std::pair<int, int>> edges() const;

    static NCGraph empty(std::vector<int> labels);
    static NCGraph from_edges(std::vector<int> labels,
                              const std::vector<std::pair<int, int>>& edge_list);
};

struct GraphMetrics {
    std::vector<int> degrees;     // aligned with labels
    bool connected = true;        // vacuously true for |V| <= 1
    std::optional<int> diameter;  // nullopt = infinite (disconnected or empty)
    std::optional<int> girth;     // nullopt = acyclic
    int max_degree = 0;
};

struct GraphShape {
    bool bipartite = false;
    bool complete = false; // requires |V| >= 1
    bool star = false;     // tree, one center of degree |V|-1, rest degree 1
    std::optional<int> regular;
    bool empty_edges = false;
};

GraphMetrics metrics(const NCGraph& g);
GraphShape classify(const NCGraph& g);

// D given by positions. Every vertex outside D must have a neighbor in D.
bool is_dominating(const NCGraph& g, const Bitset& d);
// D given by labels; throws NotASubset on a non-vertex.
bool is_dominating(const NCGraph& g, const std::vector<int>& d_labels);

// Smallest dominating set; ties broken lexicographically by vertex label.
// Throws SizeLimitExceeded above the cap. Returns labels.
std::vector<int> minimum_dominating_set(const NCGraph& g, int vertex_cap = 32);

struct ChromaticOptions {
    int edge_cap = 64;
    long long timeout_ms = 10000;
};

struct ChromaticResult {
    bool determinate = true;
    int chi_prime = 0;     // valid when determinate
    int vizing_class = 0;  // 1 or 2 when determinate
    int max_degree = 0;
    std::vector<int> coloring; // per edge (in edges() order), 0-based colors
    std::string note;          // e.g. timeout reason
};

// Exact classification: a full backtracking search for a proper edge
// coloring with max_degree colors; exhaustion proves class 2 and a
// (max_degree+1)-coloring is then produced as the certificate.
ChromaticResult chromatic_index(const NCGraph& g, const ChromaticOptions& opts = {});

// Adjacency-preserving bijection as (label1, label2) pairs, or nullopt.
std::optional<std::vector<std::pair<int, int>>> are_isomorphic(const NCGraph& g1,
                                                               const NCGraph& g2,
                                                               int vertex_cap = 64);

// Byte-deterministic Graphviz DOT: vertex lines then edge lines, sorted.
std::string to_dot(const NCGraph& g);

} // namespace ringlab
