#pragma once

#include "wordsim/library.hpp"
#include "wordsim/rng.hpp"
#include "wordsim/world.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordsim {

inline constexpr int kGridSize = 7;
inline constexpr int kMaxLocations = 11;
inline constexpr int kMaxPlacementAttempts = 100;
inline constexpr std::uint32_t kPreferredWeight = 10;
inline constexpr std::uint32_t kNeutralWeight = 1;

enum class Affinity : std::uint8_t { Neutral, Prefers, Forbids };

// Room-kind adjacency preferences. Lookups are symmetric.
class ConnectionPreferenceTable {
public:
    static const ConnectionPreferenceTable& standard();

    [[nodiscard]] Affinity affinity(RoomKind a, RoomKind b) const noexcept
    {
        return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    [[nodiscard]] std::uint32_t weight(RoomKind a, RoomKind b) const noexcept;

    void prefer(RoomKind a, RoomKind b);
    void forbid(RoomKind a, RoomKind b);

private:
    std::array<std::array<Affinity, kRoomKindCount>, kRoomKindCount> table_{};
};

struct MapCell {
    RoomKind kind;
    int row;
    int col;
    friend constexpr bool operator==(const MapCell&, const MapCell&) = default;
};

struct MapEdge {
    std::uint8_t a;       // cell index
    std::uint8_t b;       // cell index
    Direction from_a;     // direction of b as seen from a
    bool door = false;
    friend constexpr bool operator==(const MapEdge&, const MapEdge&) = default;
};

struct MapLayout {
    std::vector<MapCell> cells; // placement order; index is the location id
    std::vector<MapEdge> edges;
    LocationId start{};

    friend bool operator==(const MapLayout&, const MapLayout&) = default;
};

struct MapOptions {
    std::optional<RoomKind> first_room; // placed at the grid center
    std::vector<RoomKind> roster;       // empty: all eleven kinds
};

class MapGenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MapLayout generate_map(Rng& rng, int num_locations, bool with_doors, const MapOptions& options = {},
                       const ConnectionPreferenceTable& prefs = ConnectionPreferenceTable::standard());

// Structural validation: grid bounds, adjacency, connectivity, forbidden pairs.
std::string validate_layout(const MapLayout& layout, const ConnectionPreferenceTable& prefs = ConnectionPreferenceTable::standard());

// Locations with exits and doors; fixtures from the library when with_fixtures.
WorldState instantiate_rooms(const MapLayout& layout, const ObjectLibrary& library, Rng& rng, bool with_fixtures = true);

// Diagnostic ASCII rendering of a layout.
std::string layout_ascii(const MapLayout& layout);

} // namespace wordsim
