#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "spexlab/canonical.hpp"
#include "spexlab/errors.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// Isomorph-free exhaustive generation by canonical augmentation: a child
// G+v is kept iff the new vertex v lies in the same automorphism orbit as
// the canonical deletion vertex (highest canonical position; restricted to
// non-cut vertices in connected mode), and per parent only one augmentation
// neighborhood per Aut(parent)-orbit of subsets is tried.  Each isomorphism
// class on the way to n is therefore constructed exactly once.
struct EnumOptions {
    bool connected = false;
    int workers = 1;
    // Subtree filter, applied to every intermediate and final graph.  A
    // false return abandons the whole augmentation subtree.  This is sound
    // only for properties that are inherited downward by subgraphs (if a
    // child violates, so does every supergraph built on it) — which holds
    // for family-freeness: every family kind here (subgraph lists, cycle
    // rules, minors, subdivisions) is monotone under edge/vertex addition,
    // so a non-free graph can never augment into a free one.
    std::function<bool(const Graph&)> keep;
    int max_degree = -1;  // reject augmentations creating a degree above this
};

namespace detail {

inline uint64_t apply_perm_mask(uint64_t mask, const std::vector<int>& sigma) {
    uint64_t out = 0;
    for (int v = 0; v < int(sigma.size()); ++v)
        if ((mask >> v) & 1) out |= uint64_t(1) << sigma[v];
    return out;
}

// one representative mask per Aut(g)-orbit of vertex subsets, ascending
inline std::vector<uint64_t> subset_orbit_reps(const Graph& g,
                                               const CanonicalResult& canon) {
    int k = g.order();
    uint64_t total = uint64_t(1) << k;
    if (canon.trivial_group) {
        std::vector<uint64_t> reps(total);
        for (uint64_t m = 0; m < total; ++m) reps[m] = m;
        return reps;
    }
    std::vector<uint64_t> uf(total);
    for (uint64_t m = 0; m < total; ++m) uf[m] = m;
    std::function<uint64_t(uint64_t)> find = [&](uint64_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& sigma : canon.generators)
        for (uint64_t m = 0; m < total; ++m) {
            uint64_t a = find(m), b = find(apply_perm_mask(m, sigma));
            if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
    std::vector<uint64_t> reps;
    for (uint64_t m = 0; m < total; ++m)
        if (find(m) == m) reps.push_back(m);
    return reps;
}

inline Graph augment(const Graph& g, uint64_t mask) {
    Graph child(g.order() + 1);
    for (auto [u, v] : g.edges()) child.add_edge(u, v);
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1) child.add_edge(v, g.order());
    return child;
}

// is the newest vertex a canonical deletion choice for this child?
inline bool accept_child(const Graph& child, bool connected) {
    int u = child.order() - 1;
    CanonicalResult canon = canonicalize(child);
    std::vector<char> allowed(child.order(), 1);
    if (connected) {
        auto cut = child.cut_vertices();
        for (int v = 0; v < child.order(); ++v) allowed[v] = !cut[v];
    }
    int w = -1, best_pos = -1;
    for (int v = 0; v < child.order(); ++v)
        if (allowed[v] && canon.labeling[v] > best_pos) {
            best_pos = canon.labeling[v];
            w = v;
        }
    return same_orbit(child, canon, u, w);
}

struct EnumJob {
    int n;
    EnumOptions opts;
    const std::function<void(const Graph&, int)>* visit;
    std::atomic<uint64_t> count{0};

    void expand(const Graph& g, int worker) {
        if (g.order() == n) {
            ++count;
            if (visit && *visit) (*visit)(g, worker);
            return;
        }
        int k = g.order();
        CanonicalResult canon = canonicalize(g);
        for (uint64_t mask : subset_orbit_reps(g, canon)) {
            if (opts.connected && mask == 0) continue;
            if (opts.max_degree >= 0 && !degree_ok(g, mask)) continue;
            Graph child = augment(g, mask);
            if (!accept_child(child, opts.connected)) continue;
            if (opts.keep && !opts.keep(child)) continue;
            expand(child, worker);
        }
    }

    bool degree_ok(const Graph& g, uint64_t mask) const {
        int newdeg = 0;
        for (int v = 0; v < g.order(); ++v)
            if ((mask >> v) & 1) {
                ++newdeg;
                if (g.degree(v) + 1 > opts.max_degree) return false;
            }
        return newdeg <= opts.max_degree;
    }
};

}  // namespace detail

// Visits each isomorphism class of graphs on exactly n vertices once (count
// of visited graphs returned).  The visitor may be called from worker
// threads; calls for a fixed worker id are sequential.
inline uint64_t enumerate_graphs(
    int n, const EnumOptions& opts,
    const std::function<void(const Graph&, int)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: n must be >= 0");
    if (!opts.connected && n > 9) throw cap_exceeded("full enumeration capped at n <= 9");
    if (opts.connected && n > 10) throw cap_exceeded("connected enumeration capped at n <= 10");

    detail::EnumJob job;
    job.n = n;
    job.opts = opts;
    job.visit = &visit;

    if (n == 0) {
        Graph g0(0);
        if (!opts.keep || opts.keep(g0)) {
            ++job.count;
            if (visit) visit(g0, 0);
        }
        return job.count;
    }

    Graph root(1);
    if (opts.keep && !opts.keep(root)) return 0;

    int workers = std::max(1, opts.workers);
    if (workers == 1 || n <= 5) {
        job.expand(root, 0);
        return job.count;
    }

    // Serial breadth-first expansion to a shallow split level, then each
    // worker owns a deterministic residue class of the subtree roots.
    int split = std::min(n - 1, 5);
    std::vector<Graph> frontier{root};
    for (int level = 1; level < split; ++level) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            CanonicalResult canon = canonicalize(g);
            for (uint64_t mask : detail::subset_orbit_reps(g, canon)) {
                if (opts.connected && mask == 0) continue;
                if (opts.max_degree >= 0 && !job.degree_ok(g, mask)) continue;
                Graph child = detail::augment(g, mask);
                if (!detail::accept_child(child, opts.connected)) continue;
                if (opts.keep && !opts.keep(child)) continue;
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < frontier.size(); i += workers)
                job.expand(frontier[i], w);
        });
    for (auto& t : pool) t.join();
    return job.count;
}

inline uint64_t enumerate_graphs(int n, bool connected,
                                 const std::function<void(const Graph&)>& visit) {
    EnumOptions opts;
    opts.connected = connected;
    return enumerate_graphs(n, opts,
                            [&](const Graph& g, int) { if (visit) visit(g); });
}

}  // namespace spexlab
