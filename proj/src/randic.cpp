#include "treespectra/randic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <type_traits>

namespace treespectra {

namespace {

constexpr int kEnumerationGuard = 64;

void check_enumeration_guard(const Graph& g) {
    if (g.edge_count() > kEnumerationGuard)
        throw CapacityError("enumeration limited to " + std::to_string(kEnumerationGuard) +
                            " edges, got " + std::to_string(g.edge_count()));
}

// Sum over p-matchings of the product of per-edge weights, for every p at
// once, by backtracking over the sorted edge list.
template <class Num, class WeightFn>
std::vector<Num> brute_matching_vector(const Graph& g, WeightFn weight) {
    check_enumeration_guard(g);
    const auto& edges = g.edges();
    const int ecount = static_cast<int>(edges.size());
    std::vector<Num> acc{Num(1)};  // acc[p] = sum over p-matchings
    std::vector<char> used(static_cast<size_t>(g.n()), 0);

    std::function<void(int, int, Num)> rec = [&](int start, int depth, Num prod) {
        for (int i = start; i < ecount; ++i) {
            const auto& [u, v] = edges[static_cast<size_t>(i)];
            if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) continue;
            Num next = prod * weight(u, v);
            if (static_cast<int>(acc.size()) <= depth + 1) acc.resize(static_cast<size_t>(depth) + 2, Num(0));
            acc[static_cast<size_t>(depth) + 1] += next;
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
            rec(i + 1, depth + 1, next);
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(0, 0, Num(1));
    return acc;
}

// Rooted-tree recursion: per vertex keep two generating vectors indexed by
// matching size, for "vertex unmatched" and "vertex matched into its subtree".
// Children are folded in one at a time.
template <class Num, class WeightFn>
std::vector<Num> tree_matching_vector(const Graph& g, WeightFn weight) {
    const int n = g.n();
    if (n == 0) return {Num(0)};
    // BFS order from the root so that children precede parents when reversed
    std::vector<int> order, parent(static_cast<size_t>(n), -1);
    order.reserve(static_cast<size_t>(n));
    order.push_back(0);
    parent[0] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : g.neighbors(v))
            if (parent[static_cast<size_t>(w)] < 0) {
                parent[static_cast<size_t>(w)] = v;
                order.push_back(w);
            }
    }

    auto mul_add = [](std::vector<Num>& dst, const std::vector<Num>& a, const std::vector<Num>& b) {
        // dst += a * b (convolution)
        if (dst.size() < a.size() + b.size() - 1) dst.resize(a.size() + b.size() - 1, Num(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) dst[i + j] += a[i] * b[j];
    };

    std::vector<std::vector<Num>> free_of(static_cast<size_t>(n)), matched(static_cast<size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<Num> a{Num(1)};  // v unmatched so far
        std::vector<Num> b{Num(0)};  // v matched to some processed child
        for (int w : g.neighbors(v)) {
            if (parent[static_cast<size_t>(w)] != v) continue;  // only fold children
            auto& fa = free_of[static_cast<size_t>(w)];
            auto& fb = matched[static_cast<size_t>(w)];
            std::vector<Num> child_any(std::max(fa.size(), fb.size()), Num(0));
            for (size_t i = 0; i < fa.size(); ++i) child_any[i] += fa[i];
            for (size_t i = 0; i < fb.size(); ++i) child_any[i] += fb[i];

            std::vector<Num> na, nb;
            mul_add(na, a, child_any);
            mul_add(nb, b, child_any);
            // v newly matched to w: weight * z * (child unmatched)
            std::vector<Num> take(fa.size() + 1, Num(0));
            Num w_edge = weight(v, w);
            for (size_t i = 0; i < fa.size(); ++i) take[i + 1] = w_edge * fa[i];
            mul_add(nb, a, take);
            a = std::move(na);
            b = std::move(nb);
        }
        free_of[static_cast<size_t>(v)] = std::move(a);
        matched[static_cast<size_t>(v)] = std::move(b);
    }

    std::vector<Num> out = free_of[0];
    const auto& m0 = matched[0];
    if (out.size() < m0.size()) out.resize(m0.size(), Num(0));
    for (size_t i = 0; i < m0.size(); ++i) out[i] += m0[i];
    while (out.size() > 1 && out.back() == Num(0)) out.pop_back();
    return out;
}

template <class Num>
MatchingIndexVector make_index_vector(std::vector<Num> vals, bool exact, long alpha_int,
                                      double alpha) {
    MatchingIndexVector miv;
    miv.exact = exact;
    miv.alpha_int = alpha_int;
    miv.alpha = alpha;
    miv.k = static_cast<int>(vals.size()) - 1;
    if constexpr (std::is_same_v<Num, BigRational>) {
        miv.values = std::move(vals);
    } else {
        miv.numeric_values = std::move(vals);
    }
    return miv;
}

BigRational exact_weight(const Graph& g, int u, int v, long alpha) {
    return BigRational(edge_strength(g, u, v)).pow(alpha);
}

}  // namespace

long edge_strength(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge_strength: not an edge");
    return static_cast<long>(g.degree(u)) * g.degree(v);
}

std::vector<std::vector<Edge>> enumerate_matchings(const Graph& g, int p) {
    if (p < 0) throw std::invalid_argument("enumerate_matchings: negative size");
    check_enumeration_guard(g);
    std::vector<std::vector<Edge>> out;
    if (p == 0) {
        out.emplace_back();
        return out;
    }
    const auto& edges = g.edges();
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    std::vector<Edge> cur;
    std::function<void(int)> rec = [&](int start) {
        // prune: not enough edges left to finish
        if (static_cast<int>(cur.size()) + (static_cast<int>(edges.size()) - start) < p) return;
        for (int i = start; i < static_cast<int>(edges.size()); ++i) {
            const auto& [u, v] = edges[static_cast<size_t>(i)];
            if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) continue;
            cur.push_back(edges[static_cast<size_t>(i)]);
            if (static_cast<int>(cur.size()) == p) {
                out.push_back(cur);
            } else {
                used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
                rec(i + 1);
                used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 0;
            }
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<mpz_class> matching_counts(const Graph& g) {
    std::vector<BigRational> vals;
    if (g.is_tree_shaped()) {
        vals = tree_matching_vector<BigRational>(g, [](int, int) { return BigRational(1); });
    } else {
        vals = brute_matching_vector<BigRational>(g, [](int, int) { return BigRational(1); });
    }
    std::vector<mpz_class> out;
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(v.num());
    return out;
}

int matching_number(const Graph& g) {
    return static_cast<int>(matching_counts(g).size()) - 1;
}

MatchingIndexVector randic_indices_bruteforce(const Graph& g, long alpha) {
    if (g.n() == 0) return make_index_vector(std::vector<BigRational>{BigRational(0)}, true, alpha,
                                             static_cast<double>(alpha));
    auto vals = brute_matching_vector<BigRational>(
        g, [&](int u, int v) { return exact_weight(g, u, v, alpha); });
    return make_index_vector(std::move(vals), true, alpha, static_cast<double>(alpha));
}

MatchingIndexVector randic_indices_bruteforce_numeric(const Graph& g, double alpha) {
    if (g.n() == 0) return make_index_vector(std::vector<double>{0.0}, false, 0, alpha);
    auto vals = brute_matching_vector<double>(g, [&](int u, int v) {
        return std::pow(static_cast<double>(edge_strength(g, u, v)), alpha);
    });
    return make_index_vector(std::move(vals), false, 0, alpha);
}

MatchingIndexVector randic_indices_tree(const Tree& t, long alpha) {
    const Graph& g = t.graph();
    auto vals = tree_matching_vector<BigRational>(
        g, [&](int u, int v) { return exact_weight(g, u, v, alpha); });
    return make_index_vector(std::move(vals), true, alpha, static_cast<double>(alpha));
}

MatchingIndexVector randic_indices_tree_numeric(const Tree& t, double alpha) {
    const Graph& g = t.graph();
    auto vals = tree_matching_vector<double>(g, [&](int u, int v) {
        return std::pow(static_cast<double>(edge_strength(g, u, v)), alpha);
    });
    return make_index_vector(std::move(vals), false, 0, alpha);
}

BigRational zagreb2(const Graph& g) {
    BigRational sum(0);
    for (const auto& [u, v] : g.edges()) sum += BigRational(edge_strength(g, u, v));
    return sum;
}

}  // namespace treespectra
