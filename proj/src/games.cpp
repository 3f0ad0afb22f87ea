#include "wordsim/games.hpp"

#include "wordsim/library.hpp"
#include "wordsim/render.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <string>

namespace wordsim {

namespace {

constexpr std::array<RoomKind, 7> kHouseRooms{
    RoomKind::Kitchen,     RoomKind::Bathroom, RoomKind::Bedroom,  RoomKind::LivingRoom,
    RoomKind::LaundryRoom, RoomKind::Backyard, RoomKind::Corridor,
};

std::uint16_t idx(ObjectId id) noexcept { return static_cast<std::uint16_t>(id); }

// Fixtures are top-level and unique per room kind, so a name identifies at most one object.
ObjectId fixture_named(const WorldState& state, std::string_view name) noexcept
{
    for (const auto& obj : state.objects) {
        if (obj.name == name && obj.parent.kind == Parent::Kind::Location &&
            (obj.kind == ObjectKind::Container || obj.kind == ObjectKind::Appliance)) {
            return obj.id;
        }
    }
    return kNoObject;
}

std::vector<ObjectId> fixtures_named(const WorldState& state, std::span<const std::string_view> names)
{
    std::vector<ObjectId> out;
    for (auto name : names) {
        const ObjectId id = fixture_named(state, name);
        if (id != kNoObject) out.push_back(id);
    }
    return out;
}

ObjectId pick_id(Rng& rng, const std::vector<ObjectId>& ids)
{
    return rng.pick(std::span<const ObjectId>(ids));
}

GameObject ingredient_object(const IngredientSpec& spec)
{
    GameObject obj;
    obj.name = spec.name;
    obj.kind = ObjectKind::Ingredient;
    obj.traits = static_cast<std::uint8_t>(kTakeable | kEdible | spec.traits);
    return obj;
}

GameObject item_object(std::string_view name)
{
    GameObject obj;
    obj.name = name;
    obj.kind = ObjectKind::Item;
    obj.traits = kTakeable;
    return obj;
}

std::string recipe_text(const WorldState& state, const std::vector<RecipeIngredient>& ingredients)
{
    std::string text = "Gather all following ingredients and follow the directions to prepare this tasty meal.\n\nIngredients:\n";
    for (std::size_t i = 0; i < ingredients.size(); ++i) {
        text += "  ";
        text += state.object(ingredients[i].object).name;
        text += i + 1 < ingredients.size() ? ",\n" : ".\n";
    }
    text += "\nDirections:\n";
    for (const auto& ing : ingredients) {
        if (ing.required.cut != CutState::Raw) {
            text += "  ";
            text += cut_verb(ing.required.cut);
            text += " the ";
            text += ing.name;
            text += ",\n";
        }
        if (ing.required.cook != CookState::Raw) {
            text += "  ";
            text += cook_verb(ing.required.cook);
            text += " the ";
            text += ing.name;
            text += ",\n";
        }
    }
    text += "  prepare meal.";
    return text;
}

void expect_range(std::string_view what, int value, int lo, int hi)
{
    if (value < lo || value > hi) {
        throw GenerationError(std::string(what) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) +
                              ", got " + std::to_string(value));
    }
}

} // namespace

GameParams GameParams::defaults(Game game) noexcept
{
    GameParams p;
    switch (game) {
    case Game::CookingWorld: break;
    case Game::Twc:
        p.num_locations = 1;
        p.num_ingredients = 0;
        p.num_distractors = 0;
        break;
    case Game::CoinCollector:
        p.num_ingredients = 0;
        p.num_distractors = 0;
        break;
    }
    return p;
}

void check_params(Game game, const GameParams& params)
{
    switch (game) {
    case Game::CookingWorld:
        expect_range("num_locations", params.num_locations, 1, kMaxLocations);
        expect_range("num_ingredients", params.num_ingredients, 1, 5);
        expect_range("num_distractors", params.num_distractors, 0, 10);
        break;
    case Game::Twc:
        expect_range("num_distractors", params.num_distractors, 0, 10);
        break;
    case Game::CoinCollector:
        expect_range("num_locations", params.num_locations, 1, kMaxLocations);
        expect_range("num_distractors", params.num_distractors, 0, 10);
        break;
    }
}

Episode generate_cooking(const Rng& root, Fold fold, const GameParams& params)
{
    check_params(Game::CookingWorld, params);
    const auto& library = ObjectLibrary::instance();
    Episode ep;

    Rng map_rng = root.substream("map");
    MapOptions options;
    options.first_room = RoomKind::Kitchen;
    ep.layout = generate_map(map_rng, params.num_locations, params.with_doors, options);
    Rng room_rng = root.substream("rooms");
    ep.initial = instantiate_rooms(ep.layout, library, room_rng, true);
    WorldState& world = ep.initial;

    RecipeTask recipe;
    Rng rng = root.substream("task");

    GameObject cookbook;
    cookbook.name = kCookbookName;
    cookbook.kind = ObjectKind::Readable;
    recipe.cookbook = add_object(world, std::move(cookbook), Parent::object(fixture_named(world, "counter")));

    static constexpr std::array<std::string_view, 3> kKnifeSpots{"cutlery drawer", "kitchen cupboard", "counter"};
    GameObject knife = item_object(kKnifeName);
    knife.traits |= kSharp;
    const ObjectId knife_spot = fixture_named(world, kKnifeSpots[rng.below(kKnifeSpots.size())]);
    recipe.knife = add_object(world, std::move(knife), Parent::object(knife_spot));

    const bool has_barbeque = fixture_named(world, "barbeque") != kNoObject;
    auto placeable = [&](const IngredientSpec& spec) { return !fixtures_named(world, spec.locations).empty(); };

    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < library.ingredients().size(); ++i) {
        const auto& spec = library.ingredients()[i];
        if ((spec.folds & fold_bit(fold)) && !library.preparations(i, fold).empty() && placeable(spec)) {
            pool.push_back(i);
        }
    }
    rng.shuffle(pool);

    std::vector<bool> used(library.ingredients().size(), false);
    std::vector<Preparation> options_for;
    for (std::size_t i : pool) {
        if (static_cast<int>(recipe.ingredients.size()) == params.num_ingredients) break;
        options_for.clear();
        for (const auto& prep : library.preparations(i, fold)) {
            if (prep.cook != CookState::Barbequed || has_barbeque) options_for.push_back(prep);
        }
        if (options_for.empty()) continue;
        const Preparation prep = options_for[rng.below(options_for.size())];
        const auto& spec = library.ingredients()[i];
        const ObjectId spot = pick_id(rng, fixtures_named(world, spec.locations));
        const ObjectId id = add_object(world, ingredient_object(spec), Parent::object(spot));
        recipe.ingredients.push_back({id, spec.name, prep});
        used[i] = true;
    }
    if (static_cast<int>(recipe.ingredients.size()) < params.num_ingredients) {
        throw GenerationError("ingredient pool for fold " + std::string(fold_name(fold)) + " is too small for " +
                              std::to_string(params.num_ingredients) + " ingredients");
    }

    Rng distract = root.substream("distractors");
    std::vector<std::size_t> spare;
    for (std::size_t i = 0; i < library.ingredients().size(); ++i) {
        const auto& spec = library.ingredients()[i];
        if (!used[i] && (spec.folds & fold_bit(fold)) && placeable(spec)) spare.push_back(i);
    }
    distract.shuffle(spare);
    if (spare.size() < static_cast<std::size_t>(params.num_distractors)) {
        throw GenerationError("not enough distractor ingredients for fold " + std::string(fold_name(fold)));
    }
    for (int k = 0; k < params.num_distractors; ++k) {
        const auto& spec = library.ingredients()[spare[static_cast<std::size_t>(k)]];
        const ObjectId spot = pick_id(distract, fixtures_named(world, spec.locations));
        add_object(world, ingredient_object(spec), Parent::object(spot));
        recipe.distractors.push_back(spec.name);
    }

    recipe.text = recipe_text(world, recipe.ingredients);
    ep.task = std::move(recipe);
    return ep;
}

Episode generate_twc(const Rng& root, Fold fold, const GameParams& params)
{
    check_params(Game::Twc, params);
    const auto& library = ObjectLibrary::instance();
    Episode ep;

    const int rooms = params.difficulty == TwcDifficulty::Hard ? 2 : 1;
    Rng map_rng = root.substream("map");
    MapOptions options;
    options.roster.assign(kHouseRooms.begin(), kHouseRooms.end());
    ep.layout = generate_map(map_rng, rooms, params.with_doors, options);
    Rng room_rng = root.substream("rooms");
    ep.initial = instantiate_rooms(ep.layout, library, room_rng, true);
    WorldState& world = ep.initial;

    Rng rng = root.substream("task");
    int wanted = 1;
    switch (params.difficulty) {
    case TwcDifficulty::Easy: wanted = 1; break;
    case TwcDifficulty::Medium: wanted = rng.between(2, 3); break;
    case TwcDifficulty::Hard: wanted = rng.between(6, 7); break;
    }

    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < library.household().size(); ++i) {
        const auto& spec = library.household()[i];
        if (spec.fold == fold && !fixtures_named(world, spec.destinations).empty()) pool.push_back(i);
    }
    rng.shuffle(pool);
    if (pool.empty()) {
        throw GenerationError("no household objects of fold " + std::string(fold_name(fold)) + " fit this map");
    }
    // Small rooms can run out of out-of-place candidates; take what the pool allows.
    const std::size_t count = std::min(pool.size(), static_cast<std::size_t>(wanted));

    TwcTask task;
    task.difficulty = params.difficulty;
    std::vector<ObjectId> spots;
    for (std::size_t k = 0; k < count; ++k) {
        const auto& spec = library.household()[pool[k]];
        const LocationId room = location_id(rng.below(world.locations.size()));
        spots.clear();
        spots.push_back(kNoObject); // the floor
        for (ObjectId id : world.location(room).objects) {
            const auto& f = world.object(id);
            if (f.is_surface() && std::find(spec.destinations.begin(), spec.destinations.end(), f.name) == spec.destinations.end()) {
                spots.push_back(id);
            }
        }
        const ObjectId spot = pick_id(rng, spots);
        const Parent parent = spot == kNoObject ? Parent::location(room) : Parent::object(spot);
        const ObjectId id = add_object(world, item_object(spec.name), parent);
        task.targets.push_back({id, spec.name, fixtures_named(world, spec.destinations)});
    }

    Rng distract = root.substream("distractors");
    std::vector<std::size_t> spare(pool.begin() + static_cast<std::ptrdiff_t>(count), pool.end());
    std::sort(spare.begin(), spare.end());
    distract.shuffle(spare);
    const std::size_t extra = std::min(spare.size(), static_cast<std::size_t>(params.num_distractors));
    for (std::size_t k = 0; k < extra; ++k) {
        const auto& spec = library.household()[spare[k]];
        // Already tidy: distractors start in one of their own canonical places.
        const ObjectId home = pick_id(distract, fixtures_named(world, spec.destinations));
        add_object(world, item_object(spec.name), Parent::object(home));
    }

    ep.task = std::move(task);
    return ep;
}

Episode generate_coin(const Rng& root, Fold fold, const GameParams& params)
{
    check_params(Game::CoinCollector, params);
    const auto& library = ObjectLibrary::instance();
    Episode ep;

    Rng map_rng = root.substream("map");
    ep.layout = generate_map(map_rng, params.num_locations, params.with_doors);
    Rng room_rng = root.substream("rooms");
    ep.initial = instantiate_rooms(ep.layout, library, room_rng, false);
    WorldState& world = ep.initial;

    Rng rng = root.substream("task");
    CoinTask task;
    task.num_distractors = params.num_distractors;
    const std::size_t n = world.locations.size();
    if (n == 1) {
        task.coin_location = world.agent_location;
    } else {
        // Uniform over the rooms other than the start.
        std::size_t k = rng.below(n - 1);
        if (k >= index_of(world.agent_location)) ++k;
        task.coin_location = location_id(k);
    }
    GameObject coin;
    coin.name = kCoinName;
    coin.kind = ObjectKind::Coin;
    coin.traits = kTakeable;
    task.coin = add_object(world, std::move(coin), Parent::location(task.coin_location));

    Rng distract = root.substream("distractors");
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < library.household().size(); ++i) {
        if (library.household()[i].fold == fold) pool.push_back(i);
    }
    distract.shuffle(pool);
    const std::size_t extra = std::min(pool.size(), static_cast<std::size_t>(params.num_distractors));
    for (std::size_t k = 0; k < extra; ++k) {
        const LocationId room = location_id(distract.below(n));
        add_object(world, item_object(library.household()[pool[k]].name), Parent::location(room));
    }

    ep.task = std::move(task);
    return ep;
}

ScoreState score_state(const WorldState& state, const Task& task)
{
    ScoreState s;
    s.raw = static_cast<int>(state.score_ledger.size());
    s.max_raw = max_raw_score(task);
    s.succeeded = state.succeeded;
    s.failed = state.failed;
    return s;
}

ScoreState score_update(WorldState& state, const StepOutcome& outcome, const Task& task)
{
    if (!state.terminal()) {
        for (RewardEvent e : outcome.reward_events) state.earn(e);
        if (outcome.triggered_failure) {
            state.failed = true;
        } else if (outcome.triggered_success) {
            state.succeeded = true;
        }
    }
    return score_state(state, task);
}

StepOutcome advance(WorldState& state, const BoundAction& action, const Task& task)
{
    StepOutcome outcome = execute(state, action, task);
    score_update(state, outcome, task);
    return outcome;
}

std::vector<Direction> shortest_path(const WorldState& state, LocationId from, LocationId to)
{
    const std::size_t n = state.locations.size();
    std::vector<int> prev(n, -1);
    std::vector<Direction> via(n, Direction::North);
    std::deque<std::size_t> queue{index_of(from)};
    prev[index_of(from)] = static_cast<int>(index_of(from));
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        if (at == index_of(to)) break;
        for (Direction d : kDirections) {
            const Exit& e = state.locations[at].exit(d);
            if (!e.present || prev[index_of(e.to)] != -1) continue;
            prev[index_of(e.to)] = static_cast<int>(at);
            via[index_of(e.to)] = d;
            queue.push_back(index_of(e.to));
        }
    }
    std::vector<Direction> path;
    if (prev[index_of(to)] == -1) return path;
    for (std::size_t at = index_of(to); at != index_of(from); at = static_cast<std::size_t>(prev[at])) {
        path.push_back(via[at]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Replays its own commands through the engine so every emitted step is known to be accepted.
class GoldPlanner {
public:
    explicit GoldPlanner(const Episode& ep) : state_(ep.initial), task_(ep.task) {}

    void act(Verb verb, std::uint16_t a = 0, std::uint16_t b = 0)
    {
        BoundAction action = bind_action(state_, verb, a, b);
        const StepOutcome outcome = advance(state_, action, task_);
        if (!outcome.accepted || state_.failed) {
            throw std::logic_error("gold path step \"" + action.surface + "\" rejected: " + outcome.response_text);
        }
        path_.push_back(std::move(action.surface));
    }

    void go_to(LocationId target)
    {
        for (Direction d : shortest_path(state_, state_.agent_location, target)) {
            const Exit& e = state_.here().exit(d);
            if (e.door != kNoObject && state_.object(e.door).open == OpenState::Closed) act(Verb::Open, idx(e.door));
            act(Verb::Move, static_cast<std::uint16_t>(d));
        }
    }

    void fetch(ObjectId id)
    {
        go_to(where(id));
        const Parent p = state_.object(id).parent;
        if (p.kind == Parent::Kind::Object && state_.objects[p.index].open == OpenState::Closed) {
            act(Verb::Open, p.index);
        }
        act(Verb::Take, idx(id));
    }

    [[nodiscard]] LocationId where(ObjectId id) const
    {
        LocationId loc{};
        if (!location_of(state_, id, loc)) throw std::logic_error("object is not in the world");
        return loc;
    }

    [[nodiscard]] std::size_t distance(ObjectId id) const
    {
        return shortest_path(state_, state_.agent_location, where(id)).size();
    }

    [[nodiscard]] const WorldState& state() const noexcept { return state_; }

    std::vector<std::string> finish() &&
    {
        if (!state_.succeeded) throw std::logic_error("gold path does not complete the task");
        return std::move(path_);
    }

private:
    WorldState state_;
    const Task& task_;
    std::vector<std::string> path_;
};

Verb verb_for(CutState c) noexcept
{
    switch (c) {
    case CutState::Chopped: return Verb::Chop;
    case CutState::Sliced: return Verb::Slice;
    default: return Verb::Dice;
    }
}

void plan_cooking(GoldPlanner& plan, const RecipeTask& recipe)
{
    const LocationId kitchen = plan.state().agent_location;
    plan.act(Verb::Read, idx(recipe.cookbook));

    const bool needs_knife = std::any_of(recipe.ingredients.begin(), recipe.ingredients.end(),
                                         [](const RecipeIngredient& i) { return i.required.cut != CutState::Raw; });
    if (needs_knife) plan.fetch(recipe.knife);

    std::vector<ObjectId> remaining;
    for (const auto& ing : recipe.ingredients) remaining.push_back(ing.object);
    while (!remaining.empty()) {
        // Nearest first; ties keep recipe order.
        auto best = remaining.begin();
        for (auto it = remaining.begin(); it != remaining.end(); ++it) {
            if (plan.distance(*it) < plan.distance(*best)) best = it;
        }
        plan.fetch(*best);
        remaining.erase(best);
    }

    plan.go_to(kitchen);
    for (const auto& ing : recipe.ingredients) {
        if (ing.required.cut != CutState::Raw) plan.act(verb_for(ing.required.cut), idx(ing.object));
    }
    // Kitchen appliances before the trip outside.
    for (bool outdoors : {false, true}) {
        for (const auto& ing : recipe.ingredients) {
            if (ing.required.cook == CookState::Raw || (ing.required.cook == CookState::Barbequed) != outdoors) continue;
            const ObjectId appliance = fixture_named(plan.state(), appliance_for(ing.required.cook));
            plan.go_to(plan.where(appliance));
            plan.act(Verb::Cook, idx(ing.object), idx(appliance));
        }
    }
    plan.go_to(kitchen);
    plan.act(Verb::PrepareMeal);
    plan.act(Verb::Eat, static_cast<std::uint16_t>(plan.state().objects.size() - 1));
}

void plan_twc(GoldPlanner& plan, const TwcTask& task)
{
    for (const auto& target : task.targets) {
        plan.fetch(target.object);
        ObjectId best = target.destinations.front();
        for (ObjectId d : target.destinations) {
            if (plan.distance(d) < plan.distance(best)) best = d;
        }
        plan.go_to(plan.where(best));
        if (plan.state().object(best).open == OpenState::Closed) plan.act(Verb::Open, idx(best));
        plan.act(Verb::Put, idx(target.object), idx(best));
    }
}

} // namespace

std::vector<std::string> gold_path(const Episode& episode)
{
    GoldPlanner plan(episode);
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, RecipeTask>) {
                plan_cooking(plan, t);
            } else if constexpr (std::is_same_v<T, TwcTask>) {
                plan_twc(plan, t);
            } else {
                plan.fetch(t.coin);
            }
        },
        episode.task);
    return std::move(plan).finish();
}

} // namespace wordsim
