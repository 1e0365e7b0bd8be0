#include "pbes/digraph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pbes::graph {

Components strongly_connected_components(const Digraph& g, const std::vector<bool>& mask)
{
    const std::size_t n = g.size();
    Components c;
    c.id.assign(n, npos);
    std::vector<std::size_t> index(n, npos);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next_edge;
    };
    std::vector<Frame> frames;

    for (std::size_t root = 0; root < n; ++root) {
        if (!mask[root] || index[root] != npos)
            continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& edges = g.out[f.v];
            if (f.next_edge < edges.size()) {
                const std::size_t w = edges[f.next_edge++].to;
                if (!mask[w])
                    continue;
                if (index[w] == npos) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::size_t v = f.v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    c.id[w] = c.count;
                } while (w != v);
                ++c.count;
            }
        }
    }
    return c;
}

namespace {

bool has_self_loop(const Digraph& g, std::size_t v)
{
    return std::any_of(g.out[v].begin(), g.out[v].end(), [v](const Edge& e) { return e.to == v; });
}

// Components at level r that contain a cycle through a rank-r vertex.
std::vector<bool> qualifying_components(const Digraph& g, const std::vector<unsigned>& ranks, unsigned r,
                                        const Components& c)
{
    std::vector<std::size_t> size(c.count, 0);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (c.id[v] != npos)
            ++size[c.id[v]];
    std::vector<bool> ok(c.count, false);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (c.id[v] != npos && ranks[v] == r && (size[c.id[v]] > 1 || has_self_loop(g, v)))
            ok[c.id[v]] = true;
    return ok;
}

std::set<unsigned> ranks_with_parity(const std::vector<unsigned>& ranks, unsigned parity)
{
    std::set<unsigned> out;
    for (unsigned r : ranks)
        if (r % 2 == parity % 2)
            out.insert(r);
    return out;
}

Components level(const Digraph& g, const std::vector<unsigned>& ranks, unsigned r)
{
    std::vector<bool> mask(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        mask[v] = ranks[v] >= r;
    return strongly_connected_components(g, mask);
}

} // namespace

std::vector<bool> cycle_vertices_with_min_parity(const Digraph& g, const std::vector<unsigned>& ranks, unsigned parity)
{
    std::vector<bool> out(g.size(), false);
    for (unsigned r : ranks_with_parity(ranks, parity)) {
        const Components c = level(g, ranks, r);
        const auto ok = qualifying_components(g, ranks, r, c);
        for (std::size_t v = 0; v < g.size(); ++v)
            if (c.id[v] != npos && ok[c.id[v]])
                out[v] = true;
    }
    return out;
}

std::optional<CycleWitness> min_parity_cycle(const Digraph& g, const std::vector<unsigned>& ranks, std::size_t v,
                                             unsigned parity)
{
    for (unsigned r : ranks_with_parity(ranks, parity)) {
        if (ranks[v] < r)
            break;
        const Components c = level(g, ranks, r);
        const auto ok = qualifying_components(g, ranks, r, c);
        if (c.id[v] == npos || !ok[c.id[v]])
            continue;
        CycleWitness w{r, {}};
        for (std::size_t u = 0; u < g.size(); ++u)
            if (c.id[u] == c.id[v])
                w.component.push_back(u);
        return w;
    }
    return std::nullopt;
}

namespace {

// Breadth-first search from `from` until `is_goal` holds for a vertex
// reached by at least one edge (or `from` itself when allow_empty).
// Returns the path as vertices and labels.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
bfs_path(const Digraph& g, std::size_t from, const std::vector<bool>& allowed, const std::vector<bool>& goal,
         bool allow_empty)
{
    if (allow_empty && goal[from])
        return std::pair{std::vector<std::size_t>{from}, std::vector<std::size_t>{}};
    const std::size_t n = g.size();
    std::vector<std::size_t> parent(n, npos);
    std::vector<std::size_t> parent_label(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    std::size_t found = npos;
    std::size_t found_parent = npos;
    std::size_t found_label = 0;
    while (!queue.empty() && found == npos) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (const Edge& e : g.out[v]) {
            if (!allowed[e.to])
                continue;
            if (goal[e.to]) {
                found = e.to;
                found_parent = v;
                found_label = e.label;
                break;
            }
            if (!seen[e.to]) {
                seen[e.to] = true;
                parent[e.to] = v;
                parent_label[e.to] = e.label;
                queue.push_back(e.to);
            }
        }
    }
    if (found == npos)
        return std::nullopt;
    std::vector<std::size_t> vertices{found};
    std::vector<std::size_t> labels{found_label};
    for (std::size_t v = found_parent; v != from; v = parent[v]) {
        vertices.push_back(v);
        labels.push_back(parent_label[v]);
    }
    vertices.push_back(from);
    std::reverse(vertices.begin(), vertices.end());
    std::reverse(labels.begin(), labels.end());
    return std::pair{std::move(vertices), std::move(labels)};
}

} // namespace

std::optional<Lasso> find_even_lasso(const Digraph& g, const std::vector<unsigned>& ranks, std::size_t start)
{
    const std::size_t n = g.size();
    const std::vector<bool> good = cycle_vertices_with_min_parity(g, ranks, 0);
    const std::vector<bool> all(n, true);
    const auto to_good = bfs_path(g, start, all, good, true);
    if (!to_good)
        return std::nullopt;
    const std::size_t target = to_good->first.back();

    const auto witness = min_parity_cycle(g, ranks, target, 0);
    std::vector<bool> in_component(n, false);
    for (std::size_t u : witness->component)
        in_component[u] = true;
    std::size_t anchor = npos;
    for (std::size_t u : witness->component)
        if (ranks[u] == witness->rank) {
            anchor = u;
            break;
        }

    // Shortest cycle through the anchor inside the component.
    std::vector<bool> anchor_goal(n, false);
    anchor_goal[anchor] = true;
    const auto loop = bfs_path(g, anchor, in_component, anchor_goal, false);
    std::vector<std::size_t> cycle = loop->first;
    std::vector<std::size_t> cycle_labels = loop->second;
    cycle.pop_back();  // drop the repeated anchor

    std::vector<bool> on_cycle(n, false);
    for (std::size_t u : cycle)
        on_cycle[u] = true;
    const auto stem = bfs_path(g, start, all, on_cycle, true);
    const std::size_t entry = stem->first.back();
    const auto pos = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), entry) - cycle.begin());
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(pos), cycle.end());
    std::rotate(cycle_labels.begin(), cycle_labels.begin() + static_cast<std::ptrdiff_t>(pos), cycle_labels.end());

    Lasso l;
    l.vertices = stem->first;
    l.labels = stem->second;
    l.cycle_start = l.vertices.size() - 1;
    l.vertices.insert(l.vertices.end(), cycle.begin() + 1, cycle.end());
    l.labels.insert(l.labels.end(), cycle_labels.begin(), cycle_labels.end());
    return l;
}

} // namespace pbes::graph
