#include "wordsim/mapgen.hpp"

#include <algorithm>
#include <queue>

namespace wordsim {

namespace {

constexpr int kDeltaRow[4] = {-1, 0, 1, 0}; // north, east, south, west
constexpr int kDeltaCol[4] = {0, 1, 0, -1};

constexpr std::array<RoomKind, kRoomKindCount> kAllRooms{
    RoomKind::Kitchen,  RoomKind::Pantry,     RoomKind::Backyard,    RoomKind::Corridor,
    RoomKind::Bedroom,  RoomKind::Bathroom,   RoomKind::LivingRoom,  RoomKind::LaundryRoom,
    RoomKind::Driveway, RoomKind::Street,     RoomKind::Supermarket,
};

ConnectionPreferenceTable build_standard()
{
    using R = RoomKind;
    ConnectionPreferenceTable t;
    // Preferences: the kitchen is the heart of the house, the corridor a hub,
    // and the street links the driveway to the supermarket.
    t.prefer(R::Pantry, R::Kitchen);
    t.prefer(R::Kitchen, R::Backyard);
    t.prefer(R::Kitchen, R::Corridor);
    t.prefer(R::Kitchen, R::LivingRoom);
    t.prefer(R::Corridor, R::Bedroom);
    t.prefer(R::Corridor, R::Bathroom);
    t.prefer(R::Corridor, R::LivingRoom);
    t.prefer(R::Corridor, R::LaundryRoom);
    t.prefer(R::Bedroom, R::Bathroom);
    t.prefer(R::LivingRoom, R::Backyard);
    t.prefer(R::LaundryRoom, R::Backyard);
    t.prefer(R::Driveway, R::Backyard);
    t.prefer(R::Driveway, R::Street);
    t.prefer(R::Street, R::Supermarket);
    t.prefer(R::Supermarket, R::Corridor);

    for (R r : {R::Bedroom, R::Bathroom, R::LaundryRoom, R::Driveway, R::Street, R::Supermarket, R::Backyard}) {
        t.forbid(R::Pantry, r);
    }
    for (R r : {R::Supermarket, R::Street, R::Driveway}) {
        t.forbid(R::Kitchen, r);
    }
    for (R r : {R::Bedroom, R::Bathroom, R::LivingRoom, R::LaundryRoom}) {
        t.forbid(R::Supermarket, r);
        t.forbid(R::Street, r);
    }
    t.forbid(R::Bedroom, R::Driveway);
    t.forbid(R::Bathroom, R::Driveway);
    return t;
}

bool in_grid(int row, int col) noexcept
{
    return row >= 0 && row < kGridSize && col >= 0 && col < kGridSize;
}

struct Attachment {
    int row;
    int col;
};

} // namespace

const ConnectionPreferenceTable& ConnectionPreferenceTable::standard()
{
    static const ConnectionPreferenceTable table = build_standard();
    return table;
}

std::uint32_t ConnectionPreferenceTable::weight(RoomKind a, RoomKind b) const noexcept
{
    switch (affinity(a, b)) {
    case Affinity::Prefers: return kPreferredWeight;
    case Affinity::Neutral: return kNeutralWeight;
    case Affinity::Forbids: return 0;
    }
    return 0;
}

void ConnectionPreferenceTable::prefer(RoomKind a, RoomKind b)
{
    table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Affinity::Prefers;
    table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = Affinity::Prefers;
}

void ConnectionPreferenceTable::forbid(RoomKind a, RoomKind b)
{
    table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Affinity::Forbids;
    table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = Affinity::Forbids;
}

MapLayout generate_map(Rng& rng, int num_locations, bool with_doors, const MapOptions& options,
                       const ConnectionPreferenceTable& prefs)
{
    if (num_locations < 1 || num_locations > kMaxLocations) {
        throw MapGenError("num_locations must be in 1.." + std::to_string(kMaxLocations) + ", got " + std::to_string(num_locations));
    }
    std::vector<RoomKind> roster = options.roster.empty() ? std::vector<RoomKind>(kAllRooms.begin(), kAllRooms.end()) : options.roster;
    if (options.first_room && std::find(roster.begin(), roster.end(), *options.first_room) == roster.end()) {
        roster.insert(roster.begin(), *options.first_room);
    }
    if (static_cast<std::size_t>(num_locations) > roster.size()) {
        throw MapGenError("not enough room kinds for " + std::to_string(num_locations) + " locations");
    }

    for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
        std::array<std::array<int, kGridSize>, kGridSize> grid{};
        for (auto& row : grid) row.fill(-1);

        MapLayout layout;
        std::vector<RoomKind> remaining = roster;
        RoomKind first = options.first_room ? *options.first_room : remaining[rng.below(remaining.size())];
        remaining.erase(std::find(remaining.begin(), remaining.end(), first));
        const int center = kGridSize / 2;
        layout.cells.push_back({first, center, center});
        grid[center][center] = 0;

        bool dead_end = false;
        std::vector<Attachment> spots;
        std::vector<std::uint32_t> weights;
        std::vector<std::size_t> viable;
        while (static_cast<int>(layout.cells.size()) < num_locations) {
            // Kinds with at least one positive-weight attachment.
            viable.clear();
            for (std::size_t k = 0; k < remaining.size(); ++k) {
                bool ok = false;
                for (const auto& cell : layout.cells) {
                    if (prefs.weight(remaining[k], cell.kind) == 0) continue;
                    for (int d = 0; d < 4 && !ok; ++d) {
                        const int r = cell.row + kDeltaRow[d];
                        const int c = cell.col + kDeltaCol[d];
                        ok = in_grid(r, c) && grid[r][c] < 0;
                    }
                    if (ok) break;
                }
                if (ok) viable.push_back(k);
            }
            if (viable.empty()) {
                dead_end = true;
                break;
            }
            const std::size_t pick = viable[rng.below(viable.size())];
            const RoomKind kind = remaining[pick];

            spots.clear();
            weights.clear();
            for (const auto& cell : layout.cells) {
                const std::uint32_t w = prefs.weight(kind, cell.kind);
                if (w == 0) continue;
                for (int d = 0; d < 4; ++d) {
                    const int r = cell.row + kDeltaRow[d];
                    const int c = cell.col + kDeltaCol[d];
                    if (!in_grid(r, c) || grid[r][c] >= 0) continue;
                    spots.push_back({r, c});
                    weights.push_back(w);
                }
            }
            const std::size_t chosen = rng.weighted(weights);
            grid[spots[chosen].row][spots[chosen].col] = static_cast<int>(layout.cells.size());
            layout.cells.push_back({kind, spots[chosen].row, spots[chosen].col});
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        if (dead_end) {
            continue;
        }

        for (std::size_t i = 0; i < layout.cells.size(); ++i) {
            for (int d : {1, 2}) { // east and south neighbours cover every adjacency once
                const int r = layout.cells[i].row + kDeltaRow[d];
                const int c = layout.cells[i].col + kDeltaCol[d];
                if (!in_grid(r, c) || grid[r][c] < 0) continue;
                const auto j = static_cast<std::size_t>(grid[r][c]);
                if (prefs.affinity(layout.cells[i].kind, layout.cells[j].kind) == Affinity::Forbids) continue;
                layout.edges.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), static_cast<Direction>(d), false});
            }
        }
        if (with_doors) {
            for (auto& e : layout.edges) {
                e.door = rng.chance(1, 2);
            }
        }
        layout.start = LocationId{0};
        return layout;
    }
    throw MapGenError("map placement retries exhausted");
}

std::string validate_layout(const MapLayout& layout, const ConnectionPreferenceTable& prefs)
{
    const auto n = layout.cells.size();
    if (n < 1 || n > static_cast<std::size_t>(kMaxLocations)) return "location count out of range";
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = layout.cells[i];
        if (!in_grid(a.row, a.col)) return "cell outside grid";
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& b = layout.cells[j];
            if (a.row == b.row && a.col == b.col) return "two rooms share a cell";
            if (a.kind == b.kind) return "duplicate room kind";
        }
    }
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<int> degree(n, 0);
    for (const auto& e : layout.edges) {
        if (e.a >= n || e.b >= n) return "edge endpoint out of range";
        const auto& a = layout.cells[e.a];
        const auto& b = layout.cells[e.b];
        const int d = static_cast<int>(e.from_a);
        if (a.row + kDeltaRow[d] != b.row || a.col + kDeltaCol[d] != b.col) return "edge endpoints are not grid-adjacent";
        if (prefs.affinity(a.kind, b.kind) == Affinity::Forbids) {
            return "forbidden edge " + std::string(room_name(a.kind)) + "-" + std::string(room_name(b.kind));
        }
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
        ++degree[e.a];
        ++degree[e.b];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d > 4; })) return "degree above 4";
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(index_of(layout.start));
    seen[index_of(layout.start)] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                q.push(v);
            }
        }
    }
    if (reached != n) return "layout is not connected";
    return {};
}

WorldState instantiate_rooms(const MapLayout& layout, const ObjectLibrary& library, Rng& rng, bool with_fixtures)
{
    WorldState state;
    state.locations.resize(layout.cells.size());
    for (std::size_t i = 0; i < layout.cells.size(); ++i) {
        const auto kind = layout.cells[i].kind;
        if (static_cast<std::size_t>(kind) >= kRoomKindCount) {
            throw MapGenError("unknown room kind " + std::to_string(static_cast<int>(kind)));
        }
        state.locations[i].id = location_id(i);
        state.locations[i].kind = kind;
    }
    if (with_fixtures) {
        for (std::size_t i = 0; i < layout.cells.size(); ++i) {
            for (const auto& spec : library.fixtures(layout.cells[i].kind)) {
                GameObject fixture;
                fixture.name = spec.name;
                fixture.kind = spec.kind;
                fixture.open = spec.open;
                add_object(state, std::move(fixture), Parent::location(location_id(i)));
            }
        }
    }

    std::vector<std::string_view> door_names(library.door_names().begin(), library.door_names().end());
    rng.shuffle(door_names);
    std::size_t next_door = 0;
    for (const auto& e : layout.edges) {
        ObjectId door = kNoObject;
        if (e.door) {
            GameObject d;
            d.id = object_id(state.objects.size());
            d.name = door_names.at(next_door++);
            d.kind = ObjectKind::Door;
            d.open = OpenState::Closed;
            // Doors belong to their first room but sit on exits rather than in the room listing.
            d.parent = Parent::location(location_id(e.a));
            door = d.id;
            state.objects.push_back(std::move(d));
        }
        state.locations[e.a].exit(e.from_a) = Exit{true, location_id(e.b), door};
        state.locations[e.b].exit(opposite(e.from_a)) = Exit{true, location_id(e.a), door};
    }
    state.agent_location = layout.start;
    return state;
}

std::string layout_ascii(const MapLayout& layout)
{
    // Each cell is 4 characters wide ("[Ki]") with one connector column between cells.
    constexpr int kWidth = kGridSize * 5;
    std::vector<std::string> lines(kGridSize * 2, std::string(kWidth, ' '));
    auto abbrev = [](RoomKind k) -> std::string {
        static constexpr std::string_view names[] = {"Ki", "Pa", "By", "Co", "Be", "Ba", "Lv", "La", "Dw", "St", "Su"};
        return std::string(names[static_cast<std::size_t>(k)]);
    };
    for (std::size_t i = 0; i < layout.cells.size(); ++i) {
        const auto& c = layout.cells[i];
        std::string label = (i == index_of(layout.start) ? "<" : "[") + abbrev(c.kind) + (i == index_of(layout.start) ? ">" : "]");
        lines[static_cast<std::size_t>(c.row * 2)].replace(static_cast<std::size_t>(c.col * 5), 4, label);
    }
    for (const auto& e : layout.edges) {
        const auto& a = layout.cells[e.a];
        const char mark = e.door ? '+' : (e.from_a == Direction::East || e.from_a == Direction::West ? '-' : '|');
        if (e.from_a == Direction::East) {
            lines[static_cast<std::size_t>(a.row * 2)][static_cast<std::size_t>(a.col * 5 + 4)] = mark;
        } else if (e.from_a == Direction::West) {
            lines[static_cast<std::size_t>(a.row * 2)][static_cast<std::size_t>(a.col * 5 - 1)] = mark;
        } else if (e.from_a == Direction::South) {
            lines[static_cast<std::size_t>(a.row * 2 + 1)][static_cast<std::size_t>(a.col * 5 + 1)] = mark;
        } else {
            lines[static_cast<std::size_t>(a.row * 2 - 1)][static_cast<std::size_t>(a.col * 5 + 1)] = mark;
        }
    }
    for (auto& line : lines) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
    }
    // Only the band of rows between the first and last occupied one.
    const auto first = std::find_if(lines.begin(), lines.end(), [](const std::string& l) { return !l.empty(); });
    const auto last = std::find_if(lines.rbegin(), lines.rend(), [](const std::string& l) { return !l.empty(); }).base();
    std::string out;
    for (auto it = first; it < last; ++it) {
        out += *it;
        out += '\n';
    }
    return out;
}

} // namespace wordsim
