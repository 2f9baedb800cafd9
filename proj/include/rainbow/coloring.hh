#ifndef RAINBOW_COLORING_HH
#define RAINBOW_COLORING_HH

#include <rainbow/graph.hh>

#include <bit>
#include <cstdint>
#include <vector>

namespace rainbow
{
    using Color = int;

    inline constexpr int default_palette_limit = 32;
    inline constexpr int max_palette_limit = 64;

    /// Colour ids live in [0, palette_size). Adjacent edges may share a colour.
    struct EdgeColoring
    {
        std::vector<Color> colors;
        int palette_size = 0;

        auto operator[] (EdgeIndex e) const -> Color { return colors[e]; }
        auto size() const -> int { return static_cast<int>(colors.size()); }

        /// Number of distinct colour ids actually present.
        auto colors_used() const -> int;

        auto operator== (const EdgeColoring &) const -> bool = default;
    };

    /// Throws GraphError if the length does not match g or an entry lies outside
    /// the palette.
    auto validate_coloring(const Graph & g, const EdgeColoring & c) -> void;

    /// Every edge its own colour.
    auto distinct_coloring(const Graph & g) -> EdgeColoring;

    /// Bounded-universe colour set, one bit per colour id below max_palette_limit.
    class ColorSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            constexpr ColorSet() = default;
            constexpr explicit ColorSet(std::uint64_t bits) : _bits(bits) { }

            static constexpr auto single(Color c) -> ColorSet { return ColorSet{ std::uint64_t{ 1 } << c }; }

            constexpr auto bits() const -> std::uint64_t { return _bits; }
            constexpr auto contains(Color c) const -> bool { return (_bits >> c) & 1u; }
            constexpr auto with(Color c) const -> ColorSet { return ColorSet{ _bits | (std::uint64_t{ 1 } << c) }; }
            constexpr auto united(ColorSet o) const -> ColorSet { return ColorSet{ _bits | o._bits }; }
            constexpr auto disjoint(ColorSet o) const -> bool { return (_bits & o._bits) == 0; }
            constexpr auto subset_of(ColorSet o) const -> bool { return (_bits & ~o._bits) == 0; }
            constexpr auto size() const -> int { return std::popcount(_bits); }
            constexpr auto empty() const -> bool { return _bits == 0; }

            auto members() const -> std::vector<Color>;

            constexpr auto operator== (const ColorSet &) const -> bool = default;
            constexpr auto operator<=> (const ColorSet &) const = default;
    };
}

#endif
