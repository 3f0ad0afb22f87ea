#pragma once

#include "wordsim/fold.hpp"
#include "wordsim/world.hpp"

#include <array>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wordsim {

// One catalog record. Names are unique across the whole library.
struct CatalogEntry {
    std::string_view name;
    ObjectKind kind = ObjectKind::Item;
    std::vector<std::string_view> canonical_locations; // fixture or room names
    FoldMask fold_tags = kAllFolds;
};

struct FixtureSpec {
    std::string_view name;
    RoomKind room;
    ObjectKind kind;   // Container or Appliance
    OpenState open;    // Closed for lidded containers, NotOpenable for surfaces/appliances
};

struct IngredientSpec {
    std::string_view name;
    std::uint8_t traits = 0; // kCuttable / kCookable / kShowsRaw
    std::vector<std::string_view> locations; // fixture names, at least one kitchen fixture
    FoldMask folds = kAllFolds;
};

struct HouseholdSpec {
    std::string_view name;
    std::vector<std::string_view> destinations; // canonical fixture names
    Fold fold = Fold::Train;
};

struct Preparation {
    CutState cut = CutState::Raw;
    CookState cook = CookState::Raw;
    friend constexpr bool operator==(const Preparation&, const Preparation&) = default;
};

// Static object catalog: room fixtures, cooking ingredients, household objects with
// canonical destinations, door names, and the few task props (coin, knife, cookbook).
class ObjectLibrary {
public:
    static const ObjectLibrary& instance();

    [[nodiscard]] std::span<const CatalogEntry> entries() const noexcept { return entries_; }
    [[nodiscard]] const CatalogEntry* find(std::string_view name) const noexcept;

    [[nodiscard]] std::span<const FixtureSpec> fixtures(RoomKind room) const noexcept
    {
        return fixtures_by_room_[static_cast<std::size_t>(room)];
    }
    [[nodiscard]] const FixtureSpec* find_fixture(std::string_view name) const noexcept;

    [[nodiscard]] std::span<const IngredientSpec> ingredients() const noexcept { return ingredients_; }
    [[nodiscard]] std::span<const HouseholdSpec> household() const noexcept { return household_; }
    [[nodiscard]] std::span<const std::string_view> door_names() const noexcept { return door_names_; }

    // Preparations of an ingredient that belong to the given fold (held-out split).
    [[nodiscard]] std::span<const Preparation> preparations(std::size_t ingredient, Fold fold) const noexcept
    {
        return preparations_[ingredient][static_cast<std::size_t>(fold)];
    }
    // Fold owning an (ingredient, preparation) combination.
    [[nodiscard]] Fold fold_of_combination(std::size_t ingredient, Preparation prep) const noexcept;

private:
    ObjectLibrary();

    std::vector<CatalogEntry> entries_;
    std::unordered_map<std::string_view, std::size_t> by_name_;
    std::array<std::vector<FixtureSpec>, kRoomKindCount> fixtures_by_room_;
    std::vector<IngredientSpec> ingredients_;
    std::vector<HouseholdSpec> household_;
    std::vector<std::string_view> door_names_;
    std::vector<std::array<std::vector<Preparation>, 3>> preparations_;
};

inline constexpr std::string_view kCoinName = "coin";
inline constexpr std::string_view kKnifeName = "knife";
inline constexpr std::string_view kCookbookName = "cookbook";
inline constexpr std::string_view kMealName = "meal";

std::string_view cut_verb(CutState c) noexcept;   // "chop" / "slice" / "dice"
std::string_view cut_adjective(CutState c) noexcept; // "chopped" ...
std::string_view cook_verb(CookState c) noexcept; // "fry" / "roast" / "barbeque"
std::string_view cook_adjective(CookState c) noexcept;
// Appliance producing a cook state ("stove" -> Fried). Raw when the name is not an appliance.
CookState cook_state_for_appliance(std::string_view appliance) noexcept;
std::string_view appliance_for(CookState c) noexcept;

} // namespace wordsim
