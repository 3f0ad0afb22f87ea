#include "wordsim/world.hpp"

#include <algorithm>
#include <string>

namespace wordsim {

std::string_view direction_name(Direction d) noexcept
{
    switch (d) {
    case Direction::North: return "north";
    case Direction::East: return "east";
    case Direction::South: return "south";
    case Direction::West: return "west";
    }
    return "north";
}

Direction opposite(Direction d) noexcept
{
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

std::string_view room_name(RoomKind kind) noexcept
{
    switch (kind) {
    case RoomKind::Kitchen: return "kitchen";
    case RoomKind::Pantry: return "pantry";
    case RoomKind::Backyard: return "backyard";
    case RoomKind::Corridor: return "corridor";
    case RoomKind::Bedroom: return "bedroom";
    case RoomKind::Bathroom: return "bathroom";
    case RoomKind::LivingRoom: return "living room";
    case RoomKind::LaundryRoom: return "laundry room";
    case RoomKind::Driveway: return "driveway";
    case RoomKind::Street: return "street";
    case RoomKind::Supermarket: return "supermarket";
    }
    return "room";
}

bool WorldState::holds(ObjectId id) const noexcept
{
    const auto& p = objects[index_of(id)].parent;
    return p.kind == Parent::Kind::Inventory;
}

bool WorldState::earned(RewardEvent e) const noexcept
{
    return std::binary_search(score_ledger.begin(), score_ledger.end(), e);
}

bool WorldState::earn(RewardEvent e)
{
    auto it = std::lower_bound(score_ledger.begin(), score_ledger.end(), e);
    if (it != score_ledger.end() && *it == e) {
        return false;
    }
    score_ledger.insert(it, e);
    return true;
}

namespace {

std::vector<ObjectId>& holder_list(WorldState& state, Parent p)
{
    switch (p.kind) {
    case Parent::Kind::Location: return state.locations[p.index].objects;
    case Parent::Kind::Object: return state.objects[p.index].contents;
    case Parent::Kind::Inventory: return state.inventory;
    case Parent::Kind::None: break;
    }
    static thread_local std::vector<ObjectId> nowhere;
    nowhere.clear();
    return nowhere;
}

} // namespace

ObjectId add_object(WorldState& state, GameObject object, Parent parent)
{
    const ObjectId id = object_id(state.objects.size());
    object.id = id;
    object.parent = Parent::none();
    state.objects.push_back(std::move(object));
    attach(state, id, parent);
    return id;
}

void detach(WorldState& state, ObjectId id)
{
    auto& obj = state.objects[index_of(id)];
    if (obj.parent.kind == Parent::Kind::None) {
        return;
    }
    auto& list = holder_list(state, obj.parent);
    list.erase(std::remove(list.begin(), list.end(), id), list.end());
    obj.parent = Parent::none();
}

void attach(WorldState& state, ObjectId id, Parent parent)
{
    state.objects[index_of(id)].parent = parent;
    if (parent.kind != Parent::Kind::None) {
        holder_list(state, parent).push_back(id);
    }
}

bool location_of(const WorldState& state, ObjectId id, LocationId& out)
{
    Parent p = state.object(id).parent;
    for (std::size_t guard = 0; guard <= state.objects.size(); ++guard) {
        switch (p.kind) {
        case Parent::Kind::Location: out = location_id(p.index); return true;
        case Parent::Kind::Object: p = state.objects[p.index].parent; break;
        case Parent::Kind::Inventory:
        case Parent::Kind::None: return false;
        }
    }
    return false;
}

std::string check_invariants(const WorldState& state)
{
    if (index_of(state.agent_location) >= state.locations.size()) {
        return "agent location out of range";
    }
    if (state.failed && state.succeeded) {
        return "state both failed and succeeded";
    }
    // Every live object must appear exactly once in its parent's list.
    for (const auto& obj : state.objects) {
        const auto& p = obj.parent;
        if (obj.kind == ObjectKind::Door) {
            // Doors hang on exits, not in room listings.
            const bool hung = std::any_of(state.locations.begin(), state.locations.end(), [&](const Location& loc) {
                return std::any_of(loc.exits.begin(), loc.exits.end(), [&](const Exit& e) { return e.present && e.door == obj.id; });
            });
            if (!hung) return "door " + std::string(obj.name) + " is not on any exit";
            continue;
        }
        const std::vector<ObjectId>* list = nullptr;
        switch (p.kind) {
        case Parent::Kind::Location:
            if (p.index >= state.locations.size()) return "object " + std::string(obj.name) + " has bad location";
            list = &state.locations[p.index].objects;
            break;
        case Parent::Kind::Object:
            if (p.index >= state.objects.size()) return "object " + std::string(obj.name) + " has bad parent";
            list = &state.objects[p.index].contents;
            break;
        case Parent::Kind::Inventory: list = &state.inventory; break;
        case Parent::Kind::None: continue;
        }
        if (std::count(list->begin(), list->end(), obj.id) != 1) {
            return "object " + std::string(obj.name) + " not listed exactly once by its parent";
        }
        if (obj.open != OpenState::NotOpenable && obj.kind != ObjectKind::Container && obj.kind != ObjectKind::Door) {
            return "object " + std::string(obj.name) + " is openable but not a container or door";
        }
        if ((obj.cut != CutState::Raw || obj.cook != CookState::Raw) && obj.kind != ObjectKind::Ingredient) {
            return "object " + std::string(obj.name) + " prepared but not an ingredient";
        }
        LocationId where{};
        if (p.kind == Parent::Kind::Object && !location_of(state, obj.id, where)) {
            // Inside something that is carried or destroyed; a cycle also ends here.
            Parent q = p;
            std::size_t hops = 0;
            while (q.kind == Parent::Kind::Object && hops <= state.objects.size()) {
                q = state.objects[q.index].parent;
                ++hops;
            }
            if (hops > state.objects.size()) {
                return "containment cycle at " + std::string(obj.name);
            }
        }
    }
    auto check_list = [&](const std::vector<ObjectId>& list, Parent expected) -> bool {
        return std::all_of(list.begin(), list.end(), [&](ObjectId id) {
            return index_of(id) < state.objects.size() && state.object(id).parent == expected;
        });
    };
    for (const auto& loc : state.locations) {
        if (!check_list(loc.objects, Parent::location(loc.id))) return "location list mismatch in " + std::string(room_name(loc.kind));
        int exits = 0;
        for (Direction d : kDirections) {
            const Exit& e = loc.exit(d);
            if (!e.present) continue;
            ++exits;
            if (index_of(e.to) >= state.locations.size()) return "exit out of range";
            const Exit& back = state.location(e.to).exit(opposite(d));
            if (!back.present || back.to != loc.id || back.door != e.door) {
                return "asymmetric exit from " + std::string(room_name(loc.kind));
            }
        }
        if (exits > 4) return "too many exits";
    }
    for (const auto& obj : state.objects) {
        if (!check_list(obj.contents, Parent::object(obj.id))) return "contents mismatch in " + std::string(obj.name);
    }
    if (!check_list(state.inventory, Parent::inventory())) return "inventory mismatch";
    if (!std::is_sorted(state.score_ledger.begin(), state.score_ledger.end())) return "score ledger unsorted";
    return {};
}

} // namespace wordsim
