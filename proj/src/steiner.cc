#include <rainbow/steiner.hh>
#include <rainbow/parallel.hh>

#include <algorithm>
#include <queue>
#include <set>
#include <string>

using std::to_string;
using std::vector;

namespace rainbow
{
    namespace
    {
        auto bfs(const Graph & g, Vertex source) -> vector<int>
        {
            vector<int> dist(g.size(), DistanceMatrix::infinity);
            std::queue<Vertex> queue;
            dist[source] = 0;
            queue.push(source);
            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop();
                for (auto & inc : g.incident(v))
                    if (dist[inc.neighbour] == DistanceMatrix::infinity) {
                        dist[inc.neighbour] = dist[v] + 1;
                        queue.push(inc.neighbour);
                    }
            }
            return dist;
        }

        auto check_triple(const Graph & g, const Triple & s) -> void
        {
            for (auto v : s)
                if (v < 0 || v >= g.size())
                    throw GraphError("terminal " + to_string(v) + " out of range");
            if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
                throw GraphError("terminal set must contain three distinct vertices");
        }

        auto require_connected(const Graph & g) -> void
        {
            if (! is_connected(g))
                throw GraphError("graph is not connected");
        }
    }

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix
    {
        DistanceMatrix d(g.size());
        for (Vertex s = 0 ; s < g.size() ; ++s) {
            auto row = bfs(g, s);
            for (Vertex t = 0 ; t < g.size() ; ++t)
                d.at(s, t) = row[t];
        }
        return d;
    }

    auto diameter(const Graph & g) -> int
    {
        require_connected(g);
        auto d = all_pairs_distances(g);
        int best = 0;
        for (Vertex a = 0 ; a < g.size() ; ++a)
            for (Vertex b = a + 1 ; b < g.size() ; ++b)
                best = std::max(best, d(a, b));
        return best;
    }

    auto steiner_value_3(const DistanceMatrix & d, const Triple & s) -> int
    {
        int best = DistanceMatrix::infinity;
        for (Vertex v = 0 ; v < d.size() ; ++v) {
            int a = d(v, s[0]), b = d(v, s[1]), c = d(v, s[2]);
            if (a == DistanceMatrix::infinity || b == DistanceMatrix::infinity || c == DistanceMatrix::infinity)
                continue;
            best = std::min(best, a + b + c);
        }
        return best;
    }

    auto steiner_distance_3(const Graph & g, const DistanceMatrix & d, const Triple & s) -> SteinerResult
    {
        check_triple(g, s);
        require_connected(g);

        Vertex center = -1;
        int best = DistanceMatrix::infinity;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            int total = d(v, s[0]) + d(v, s[1]) + d(v, s[2]);
            if (total < best) {
                best = total;
                center = v;
            }
        }

        std::set<EdgeIndex> tree;
        for (auto t : s) {
            Vertex x = t;
            while (x != center) {
                // smallest-id neighbour one step closer to the centre
                for (auto & inc : g.incident(x))
                    if (d(center, inc.neighbour) + 1 == d(center, x)) {
                        tree.insert(inc.edge);
                        x = inc.neighbour;
                        break;
                    }
            }
        }

        SteinerResult result{ static_cast<int>(tree.size()), vector<EdgeIndex>(tree.begin(), tree.end()), center };
        return result;
    }

    auto steiner_distance_3(const Graph & g, const Triple & s) -> SteinerResult
    {
        return steiner_distance_3(g, all_pairs_distances(g), s);
    }

    auto all_triple_distances(const Graph & g, int jobs) -> vector<TripleDistance>
    {
        require_connected(g);
        auto d = all_pairs_distances(g);
        const int n = g.size();

        vector<vector<TripleDistance>> per_first(n);
        parallel_for(n, jobs, [&] (int a) {
            for (Vertex b = a + 1 ; b < n ; ++b)
                for (Vertex c = b + 1 ; c < n ; ++c)
                    per_first[a].push_back({ { a, b, c }, steiner_value_3(d, { a, b, c }) });
        });

        vector<TripleDistance> result;
        for (auto & chunk : per_first)
            result.insert(result.end(), chunk.begin(), chunk.end());
        return result;
    }

    auto sdiam3(const Graph & g, int jobs) -> int
    {
        if (g.size() < 3)
            throw GraphError("3-Steiner diameter needs at least three vertices");
        require_connected(g);

        auto d = all_pairs_distances(g);
        const int n = g.size();
        vector<int> per_first(n, 0);
        parallel_for(n, jobs, [&] (int a) {
            for (Vertex b = a + 1 ; b < n ; ++b)
                for (Vertex c = b + 1 ; c < n ; ++c) {
                    int best = DistanceMatrix::infinity;
                    for (Vertex v = 0 ; v < n ; ++v)
                        best = std::min(best, d(v, a) + d(v, b) + d(v, c));
                    per_first[a] = std::max(per_first[a], best);
                }
        });
        return *std::max_element(per_first.begin(), per_first.end());
    }
}
