#pragma once

#include "wordsim/world.hpp"

#include <string>
#include <vector>

namespace wordsim {

inline constexpr std::string_view kEmptyInventory = "Your inventory is empty.";

// Room description: room sentence, one clause per top-level object, then exits in
// north/east/south/west order on a new line.
std::string render_observation(const WorldState& state);
void render_observation(const WorldState& state, std::string& out);

std::string render_inventory(const WorldState& state);
void render_inventory(const WorldState& state, std::string& out);

// Inventory, then room objects with the contents of open containers (preorder),
// then doors on the current room's exits.
std::vector<ObjectId> visible_objects(const WorldState& state);
void visible_objects(const WorldState& state, std::vector<ObjectId>& out);

// "diced fried purple potato", "raw purple potato", "knife".
void append_display_name(const GameObject& obj, std::string& out);
std::string display_name(const GameObject& obj);

// Noun phrase with article plus state clause: "a fridge that is closed".
void append_description(const WorldState& state, const GameObject& obj, std::string& out);
std::string describe_object(const WorldState& state, ObjectId id);

// "a" or "an" for the given word.
std::string_view indefinite_article(std::string_view word) noexcept;

// "x", "x, and y", "x, y, and z".
void append_listing(const WorldState& state, const std::vector<ObjectId>& items, std::string& out);

} // namespace wordsim
