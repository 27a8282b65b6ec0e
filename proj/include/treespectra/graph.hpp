#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treespectra {

using Edge = std::pair<int, int>;  // stored normalized, first < second

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;  // the null graph (n = 0)
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj(v); }
    bool has_edge(int u, int v) const;

    bool connected() const;
    bool is_tree_shaped() const { return n_ >= 1 && edge_count() == n_ - 1 && connected(); }

private:
    const std::vector<int>& adj(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
        return adj_[static_cast<size_t>(v)];
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// A Graph verified to be connected with exactly n-1 edges.
class Tree {
public:
    explicit Tree(Graph g);

    const Graph& graph() const { return g_; }
    int n() const { return g_.n(); }

private:
    Graph g_;
};

// Branch lengths of a spider: r >= 3 pendant paths hanging off one center.
// Lengths are kept sorted ascending.
class StarlikeSpec {
public:
    explicit StarlikeSpec(std::vector<int> branch_lengths);

    const std::vector<int>& branch_lengths() const { return lengths_; }
    int num_branches() const { return static_cast<int>(lengths_.size()); }
    int n() const;
    int num_odd_branches() const;
    int num_unit_branches() const;  // branches of length exactly 1

    std::string to_string() const;

private:
    std::vector<int> lengths_;
};

// Path on m vertices with p pendants at one end and q at the other.
class DoubleStarlikeSpec {
public:
    DoubleStarlikeSpec(int m, int p, int q);

    int m() const { return m_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return m_ + p_ + q_; }

    std::string to_string() const;

private:
    int m_, p_, q_;
};

Tree build_path(int n);
Tree build_starlike(const StarlikeSpec& spec);
Tree build_double_starlike(const DoubleStarlikeSpec& spec);

Graph build_star(int n);
Graph build_cycle(int n);
Graph build_complete(int n);
Graph build_complete_bipartite(int p, int q);
// name: star | cycle | complete | complete_bipartite
Graph build_family(std::string_view name, const std::vector<int>& params);

Graph disjoint_union(const Graph& a, const Graph& b);

// Uniform random labeled tree (Prufer decode, SplitMix64 stream).
Tree random_tree(int n, std::uint64_t seed);

// Deterministic corpus: `count` random trees with sizes drawn uniformly from
// [min_n, max_n], all derived from one seed.
std::vector<Tree> random_tree_corpus(int count, int min_n, int max_n, std::uint64_t seed);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format: first line n, then one "u v" per edge; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace treespectra
