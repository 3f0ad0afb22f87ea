#include "wordsim/render.hpp"

#include "wordsim/library.hpp"

namespace wordsim {

namespace {

constexpr std::string_view kConnectives[] = {
    "In one part of the room you see ",
    "There is also ",
    "You also see ",
    "In another part of the room you see ",
};

std::string_view capitalized_direction(Direction d) noexcept
{
    switch (d) {
    case Direction::North: return "North";
    case Direction::East: return "East";
    case Direction::South: return "South";
    case Direction::West: return "West";
    }
    return "North";
}

std::string_view leading_word(const GameObject& obj) noexcept
{
    if (obj.kind == ObjectKind::Ingredient) {
        if (obj.cut != CutState::Raw) return cut_adjective(obj.cut);
        if (obj.cook != CookState::Raw) return cook_adjective(obj.cook);
        if (obj.has(kShowsRaw)) return "raw";
    }
    return obj.name;
}

void append_with_article(const GameObject& obj, std::string& out)
{
    out += indefinite_article(leading_word(obj));
    out += ' ';
    append_display_name(obj, out);
}

void collect_visible(const WorldState& state, ObjectId id, std::vector<ObjectId>& out)
{
    out.push_back(id);
    const auto& obj = state.object(id);
    if (obj.kind == ObjectKind::Container && obj.open != OpenState::Closed) {
        for (ObjectId child : obj.contents) {
            collect_visible(state, child, out);
        }
    }
}

} // namespace

std::string_view indefinite_article(std::string_view word) noexcept
{
    if (word.empty()) return "a";
    switch (word.front()) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return "an";
    default: return "a";
    }
}

void append_display_name(const GameObject& obj, std::string& out)
{
    if (obj.kind == ObjectKind::Ingredient) {
        if (obj.cut != CutState::Raw) {
            out += cut_adjective(obj.cut);
            out += ' ';
        }
        if (obj.cook != CookState::Raw) {
            out += cook_adjective(obj.cook);
            out += ' ';
        } else if (obj.has(kShowsRaw)) {
            out += "raw ";
        }
    }
    out += obj.name;
}

std::string display_name(const GameObject& obj)
{
    std::string out;
    append_display_name(obj, out);
    return out;
}

void append_listing(const WorldState& state, const std::vector<ObjectId>& items, std::string& out)
{
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ", ";
            if (i + 1 == items.size()) out += "and ";
        }
        append_with_article(state.object(items[i]), out);
    }
}

void append_description(const WorldState& state, const GameObject& obj, std::string& out)
{
    append_with_article(obj, out);
    if (obj.kind == ObjectKind::Door) {
        out += obj.open == OpenState::Closed ? " that is closed" : " that is open";
        return;
    }
    if (obj.kind != ObjectKind::Container) {
        return;
    }
    switch (obj.open) {
    case OpenState::Closed:
        out += " that is closed";
        break;
    case OpenState::Open:
        if (obj.contents.empty()) {
            out += " that is open and empty";
        } else {
            out += " that is open and contains ";
            append_listing(state, obj.contents, out);
        }
        break;
    case OpenState::NotOpenable:
        if (obj.contents.empty()) {
            out += ", that has nothing on it";
        } else {
            out += " that has ";
            append_listing(state, obj.contents, out);
            out += " on it";
        }
        break;
    }
}

std::string describe_object(const WorldState& state, ObjectId id)
{
    std::string out;
    append_description(state, state.object(id), out);
    return out;
}

void render_observation(const WorldState& state, std::string& out)
{
    const Location& room = state.here();
    out += "You are in the ";
    out += room_name(room.kind);
    out += '.';
    for (std::size_t i = 0; i < room.objects.size(); ++i) {
        out += ' ';
        out += kConnectives[i % std::size(kConnectives)];
        append_description(state, state.object(room.objects[i]), out);
        out += '.';
    }
    bool first_exit = true;
    for (Direction d : kDirections) {
        const Exit& e = room.exit(d);
        if (!e.present) continue;
        out += first_exit ? "\n" : " ";
        first_exit = false;
        out += "To the ";
        out += capitalized_direction(d);
        out += " you see ";
        if (e.door == kNoObject) {
            out += "the ";
            out += room_name(state.location(e.to).kind);
        } else {
            const auto& door = state.object(e.door);
            if (door.open == OpenState::Closed) {
                out += "a closed ";
                out += door.name;
            } else {
                out += "the ";
                out += room_name(state.location(e.to).kind);
                out += ", through an open ";
                out += door.name;
            }
        }
        out += '.';
    }
}

std::string render_observation(const WorldState& state)
{
    std::string out;
    out.reserve(512);
    render_observation(state, out);
    return out;
}

void render_inventory(const WorldState& state, std::string& out)
{
    if (state.inventory.empty()) {
        out += kEmptyInventory;
        return;
    }
    out += "Inventory:";
    for (ObjectId id : state.inventory) {
        out += "\n  ";
        append_with_article(state.object(id), out);
    }
}

std::string render_inventory(const WorldState& state)
{
    std::string out;
    render_inventory(state, out);
    return out;
}

void visible_objects(const WorldState& state, std::vector<ObjectId>& out)
{
    out.clear();
    for (ObjectId id : state.inventory) {
        collect_visible(state, id, out);
    }
    const Location& room = state.here();
    for (ObjectId id : room.objects) {
        collect_visible(state, id, out);
    }
    for (Direction d : kDirections) {
        const Exit& e = room.exit(d);
        if (e.present && e.door != kNoObject) {
            out.push_back(e.door);
        }
    }
}

std::vector<ObjectId> visible_objects(const WorldState& state)
{
    std::vector<ObjectId> out;
    visible_objects(state, out);
    return out;
}

} // namespace wordsim
