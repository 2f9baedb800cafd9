#include <rainbow/coloring.hh>

#include <set>
#include <string>

using std::to_string;

namespace rainbow
{
    auto EdgeColoring::colors_used() const -> int
    {
        return static_cast<int>(std::set<Color>(colors.begin(), colors.end()).size());
    }

    auto validate_coloring(const Graph & g, const EdgeColoring & c) -> void
    {
        if (c.size() != g.edge_count())
            throw GraphError("coloring has " + to_string(c.size()) + " entries but the graph has " + to_string(g.edge_count()) + " edges");
        if (c.palette_size < 0)
            throw GraphError("negative palette size");
        for (EdgeIndex e = 0 ; e < c.size() ; ++e)
            if (c[e] < 0 || c[e] >= c.palette_size)
                throw GraphError("edge " + to_string(e) + " has colour " + to_string(c[e]) + " outside palette " + to_string(c.palette_size));
    }

    auto distinct_coloring(const Graph & g) -> EdgeColoring
    {
        EdgeColoring c{ {}, g.edge_count() };
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
            c.colors.push_back(e);
        return c;
    }

    auto ColorSet::members() const -> std::vector<Color>
    {
        std::vector<Color> result;
        for (auto b = _bits ; b ; b &= b - 1)
            result.push_back(std::countr_zero(b));
        return result;
    }
}
