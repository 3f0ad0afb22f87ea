#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace wordsim {

enum class ObjectId : std::uint16_t {};
enum class LocationId : std::uint8_t {};

inline constexpr ObjectId kNoObject{0xFFFF};

constexpr std::size_t index_of(ObjectId id) noexcept { return static_cast<std::size_t>(id); }
constexpr std::size_t index_of(LocationId id) noexcept { return static_cast<std::size_t>(id); }
constexpr ObjectId object_id(std::size_t index) noexcept { return static_cast<ObjectId>(index); }
constexpr LocationId location_id(std::size_t index) noexcept { return static_cast<LocationId>(index); }

enum class Direction : std::uint8_t { North, East, South, West };
inline constexpr std::array<Direction, 4> kDirections{Direction::North, Direction::East, Direction::South, Direction::West};

std::string_view direction_name(Direction d) noexcept;
Direction opposite(Direction d) noexcept;

enum class RoomKind : std::uint8_t {
    Kitchen,
    Pantry,
    Backyard,
    Corridor,
    Bedroom,
    Bathroom,
    LivingRoom,
    LaundryRoom,
    Driveway,
    Street,
    Supermarket,
};
inline constexpr std::size_t kRoomKindCount = 11;

std::string_view room_name(RoomKind kind) noexcept;

enum class ObjectKind : std::uint8_t { Item, Container, Door, Appliance, Ingredient, Coin, Readable };
enum class OpenState : std::uint8_t { NotOpenable, Open, Closed };
enum class CutState : std::uint8_t { Raw, Chopped, Sliced, Diced };
enum class CookState : std::uint8_t { Raw, Fried, Roasted, Barbequed };

// Behavioural flags carried alongside the object kind.
enum Trait : std::uint8_t {
    kTakeable = 1U << 0,
    kEdible = 1U << 1,
    kCuttable = 1U << 2,
    kCookable = 1U << 3,
    kShowsRaw = 1U << 4, // described as "raw" while uncooked
    kSharp = 1U << 5,    // usable as a knife
    kMeal = 1U << 6,
};

struct Parent {
    enum class Kind : std::uint8_t { None, Location, Object, Inventory };
    Kind kind = Kind::None;
    std::uint16_t index = 0;

    static constexpr Parent none() noexcept { return {}; }
    static constexpr Parent location(LocationId id) noexcept { return {Kind::Location, static_cast<std::uint16_t>(id)}; }
    static constexpr Parent object(ObjectId id) noexcept { return {Kind::Object, static_cast<std::uint16_t>(id)}; }
    static constexpr Parent inventory() noexcept { return {Kind::Inventory, 0}; }

    friend constexpr bool operator==(const Parent&, const Parent&) = default;
};

struct GameObject {
    ObjectId id{};
    std::string_view name; // points at static catalog storage
    ObjectKind kind = ObjectKind::Item;
    OpenState open = OpenState::NotOpenable;
    CutState cut = CutState::Raw;
    CookState cook = CookState::Raw;
    std::uint8_t traits = 0;
    std::vector<ObjectId> contents;
    Parent parent;

    [[nodiscard]] bool has(Trait t) const noexcept { return (traits & t) != 0; }
    // Containers without a lid (counters, shelves) hold things "on" them and are always visible inside.
    [[nodiscard]] bool is_surface() const noexcept { return kind == ObjectKind::Container && open == OpenState::NotOpenable; }
    [[nodiscard]] bool is_receptacle() const noexcept { return kind == ObjectKind::Container && open != OpenState::Closed; }
    [[nodiscard]] bool is_live() const noexcept { return parent.kind != Parent::Kind::None; }

    friend bool operator==(const GameObject&, const GameObject&) = default;
};

struct Exit {
    bool present = false;
    LocationId to{};
    ObjectId door = kNoObject;

    friend constexpr bool operator==(const Exit&, const Exit&) = default;
};

struct Location {
    LocationId id{};
    RoomKind kind = RoomKind::Kitchen;
    std::array<Exit, 4> exits{};
    std::vector<ObjectId> objects;

    [[nodiscard]] const Exit& exit(Direction d) const noexcept { return exits[static_cast<std::size_t>(d)]; }
    Exit& exit(Direction d) noexcept { return exits[static_cast<std::size_t>(d)]; }

    friend bool operator==(const Location&, const Location&) = default;
};

// Reward events are compact codes: (kind << 16) | subject object index.
struct RewardEvent {
    std::uint32_t code = 0;
    friend constexpr auto operator<=>(const RewardEvent&, const RewardEvent&) = default;
};

struct WorldState {
    std::vector<Location> locations;
    std::vector<GameObject> objects;
    LocationId agent_location{};
    std::vector<ObjectId> inventory;
    std::uint32_t step_count = 0;
    std::vector<RewardEvent> score_ledger; // kept sorted, no duplicates
    bool failed = false;
    bool succeeded = false;

    [[nodiscard]] const GameObject& object(ObjectId id) const { return objects[index_of(id)]; }
    GameObject& object(ObjectId id) { return objects[index_of(id)]; }
    [[nodiscard]] const Location& location(LocationId id) const { return locations[index_of(id)]; }
    Location& location(LocationId id) { return locations[index_of(id)]; }
    [[nodiscard]] const Location& here() const { return locations[index_of(agent_location)]; }
    [[nodiscard]] bool terminal() const noexcept { return failed || succeeded; }

    [[nodiscard]] bool holds(ObjectId id) const noexcept;
    [[nodiscard]] bool earned(RewardEvent e) const noexcept;
    // Returns false when the event was already in the ledger.
    bool earn(RewardEvent e);

    friend bool operator==(const WorldState&, const WorldState&) = default;
};

// Containment helpers. They keep parent/contents lists consistent.
ObjectId add_object(WorldState& state, GameObject object, Parent parent);
void detach(WorldState& state, ObjectId id);
void attach(WorldState& state, ObjectId id, Parent parent);
inline void move_object(WorldState& state, ObjectId id, Parent parent)
{
    detach(state, id);
    attach(state, id, parent);
}

// Location holding the object, following parents up the containment forest.
// Returns false for inventory or destroyed objects.
bool location_of(const WorldState& state, ObjectId id, LocationId& out);

// Checks containment/exit invariants; returns an empty string when the state is well formed.
std::string check_invariants(const WorldState& state);

} // namespace wordsim
