#include "treespectra/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace treespectra {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.resize(static_cast<size_t>(n));
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj_[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    return reached == n_;
}

Tree::Tree(Graph g) : g_(std::move(g)) {
    if (g_.n() < 1) throw std::invalid_argument("Tree: needs at least one vertex");
    if (g_.edge_count() != g_.n() - 1 || !g_.connected())
        throw std::invalid_argument("Tree: graph is not a tree");
}

StarlikeSpec::StarlikeSpec(std::vector<int> branch_lengths) : lengths_(std::move(branch_lengths)) {
    if (lengths_.size() < 3) throw std::invalid_argument("StarlikeSpec: need at least 3 branches");
    for (int l : lengths_)
        if (l < 1) throw std::invalid_argument("StarlikeSpec: branch lengths must be positive");
    std::sort(lengths_.begin(), lengths_.end());
}

int StarlikeSpec::n() const {
    return 1 + std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

int StarlikeSpec::num_odd_branches() const {
    return static_cast<int>(std::count_if(lengths_.begin(), lengths_.end(),
                                          [](int l) { return l % 2 == 1; }));
}

int StarlikeSpec::num_unit_branches() const {
    return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), 1));
}

std::string StarlikeSpec::to_string() const {
    std::string s = "T(";
    for (size_t i = 0; i < lengths_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(lengths_[i]);
    }
    return s + ")";
}

DoubleStarlikeSpec::DoubleStarlikeSpec(int m, int p, int q) : m_(m), p_(p), q_(q) {
    if (m < 2) throw std::invalid_argument("DoubleStarlikeSpec: path length must be >= 2");
    if (p < 2 || q < 2)
        throw std::invalid_argument("DoubleStarlikeSpec: pendant counts must be >= 2");
}

std::string DoubleStarlikeSpec::to_string() const {
    return "H_" + std::to_string(m_) + "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

Tree build_path(int n) {
    if (n < 1) throw std::invalid_argument("build_path: n must be positive");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(Graph(n, std::move(edges)));
}

Tree build_starlike(const StarlikeSpec& spec) {
    std::vector<Edge> edges;
    int next = 1;
    for (int len : spec.branch_lengths()) {
        int prev = 0;
        for (int j = 0; j < len; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(Graph(spec.n(), std::move(edges)));
}

Tree build_double_starlike(const DoubleStarlikeSpec& spec) {
    const int m = spec.m();
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    int next = m;
    for (int i = 0; i < spec.p(); ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < spec.q(); ++i) edges.emplace_back(m - 1, next++);
    return Tree(Graph(spec.n(), std::move(edges)));
}

Graph build_star(int n) {
    if (n < 1) throw std::invalid_argument("build_star: n must be positive");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, std::move(edges));
}

Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("build_cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("build_complete: n must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph build_complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("build_complete_bipartite: sizes must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
    return Graph(p + q, std::move(edges));
}

Graph build_family(std::string_view name, const std::vector<int>& params) {
    auto want = [&](size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("build_family: wrong parameter count for '" +
                                        std::string(name) + "'");
    };
    if (name == "star") {
        want(1);
        return build_star(params[0]);
    }
    if (name == "cycle") {
        want(1);
        return build_cycle(params[0]);
    }
    if (name == "complete") {
        want(1);
        return build_complete(params[0]);
    }
    if (name == "complete_bipartite") {
        want(2);
        return build_complete_bipartite(params[0], params[1]);
    }
    throw std::invalid_argument("build_family: unknown family '" + std::string(name) + "'");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), std::move(edges));
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t next_below(std::uint64_t bound) {
        // rejection sampling keeps the draw unbiased
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }
};

}  // namespace

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be positive");
    if (n == 1) return Tree(Graph(1, {}));
    if (n == 2) return Tree(Graph(2, {{0, 1}}));

    SplitMix64 rng{seed};
    std::vector<int> prufer(static_cast<size_t>(n - 2));
    for (auto& x : prufer) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int a : prufer) ++degree[static_cast<size_t>(a)];

    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<size_t>(v)] == 1) leaves.push(v);

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int a : prufer) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, a);
        if (--degree[static_cast<size_t>(a)] == 1) leaves.push(a);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(u, v);
    return Tree(Graph(n, std::move(edges)));
}

std::vector<Tree> random_tree_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
    if (count < 0 || min_n < 1 || max_n < min_n)
        throw std::invalid_argument("random_tree_corpus: bad parameters");
    SplitMix64 rng{seed};
    std::vector<Tree> trees;
    trees.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        int n = min_n + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - min_n + 1)));
        trees.push_back(random_tree(n, rng.next()));
    }
    return trees;
}

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (n < 0) {
            long val;
            if (!(fields >> val) || !(fields >> std::ws).eof() || val < 0)
                throw ParseError(lineno, "expected vertex count, got '" + line + "'");
            n = static_cast<int>(val);
            continue;
        }
        long u, v;
        if (!(fields >> u >> v) || !(fields >> std::ws).eof())
            throw ParseError(lineno, "expected 'u v', got '" + line + "'");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex out of range in '" + line + "'");
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError(lineno, "duplicate edge " + std::to_string(e.first) + " " +
                                         std::to_string(e.second));
        edges.push_back(e);
    }
    if (n < 0) throw ParseError(lineno, "missing vertex count line");
    return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace treespectra
