#include "wordsim/actions.hpp"

#include "wordsim/library.hpp"
#include "wordsim/render.hpp"
#include "wordsim/rules.hpp"

#include <algorithm>
#include <cctype>

namespace wordsim {

namespace {

using enum Verb;
constexpr auto O = SlotKind::Object;
constexpr auto D = SlotKind::Direction;
constexpr auto N = SlotKind::None;

constexpr ActionTemplate kTemplates[] = {
    {LookAround, 0, {N, N}, "look around", TemplateScope::Generic},
    {Inventory, 0, {N, N}, "inventory", TemplateScope::Generic},
    {Examine, 1, {O, N}, "examine OBJ", TemplateScope::Generic},
    {Move, 1, {D, N}, "move DIR", TemplateScope::Generic},
    {Open, 1, {O, N}, "open OBJ", TemplateScope::Generic},
    {Close, 1, {O, N}, "close OBJ", TemplateScope::Generic},
    {Take, 1, {O, N}, "take OBJ", TemplateScope::Generic},
    {Put, 2, {O, O}, "put OBJ in OBJ", TemplateScope::Generic},
    {Read, 1, {O, N}, "read OBJ", TemplateScope::CookingWorldOnly},
    {Cook, 2, {O, O}, "cook OBJ in OBJ", TemplateScope::CookingWorldOnly},
    {Chop, 1, {O, N}, "chop OBJ", TemplateScope::CookingWorldOnly},
    {Slice, 1, {O, N}, "slice OBJ", TemplateScope::CookingWorldOnly},
    {Dice, 1, {O, N}, "dice OBJ", TemplateScope::CookingWorldOnly},
    {Eat, 1, {O, N}, "eat OBJ", TemplateScope::CookingWorldOnly},
    {PrepareMeal, 0, {N, N}, "prepare meal", TemplateScope::CookingWorldOnly},
};

constexpr std::string_view verb_word(Verb v) noexcept
{
    switch (v) {
    case LookAround: return "look around";
    case Inventory: return "inventory";
    case Examine: return "examine";
    case Move: return "move";
    case Open: return "open";
    case Close: return "close";
    case Take: return "take";
    case Put: return "put";
    case Read: return "read";
    case Cook: return "cook";
    case Chop: return "chop";
    case Slice: return "slice";
    case Dice: return "dice";
    case Eat: return "eat";
    case PrepareMeal: return "prepare meal";
    }
    return "";
}

CutState cut_for(Verb v) noexcept
{
    switch (v) {
    case Chop: return CutState::Chopped;
    case Slice: return CutState::Sliced;
    case Dice: return CutState::Diced;
    default: return CutState::Raw;
    }
}

bool holds_knife(const WorldState& state) noexcept
{
    return std::any_of(state.inventory.begin(), state.inventory.end(),
                       [&](ObjectId id) { return state.object(id).has(kSharp); });
}

// Listing-side readiness for "prepare meal"; execute() checks it separately.
bool meal_ready_for_listing(const WorldState& state, const RecipeTask& recipe)
{
    if (state.here().kind != RoomKind::Kitchen || recipe.ingredients.empty()) return false;
    for (const auto& ing : recipe.ingredients) {
        const auto& obj = state.object(ing.object);
        if (obj.parent.kind != Parent::Kind::Inventory) return false;
        if (obj.cut != ing.required.cut || obj.cook != ing.required.cook) return false;
    }
    return true;
}

void append_name(const WorldState& state, std::uint16_t id, std::string& out)
{
    out += state.objects[id].name;
}

const RecipeTask* recipe_of(const Task& task) noexcept
{
    return std::get_if<RecipeTask>(&task);
}

void finish_terminal_text(StepOutcome& outcome)
{
    if (outcome.triggered_failure) {
        outcome.response_text += '\n';
        outcome.response_text += kGameFailed;
    } else if (outcome.triggered_success) {
        outcome.response_text += '\n';
        outcome.response_text += kGameCompleted;
    }
}

} // namespace

std::span<const ActionTemplate> action_templates() noexcept
{
    return kTemplates;
}

const ActionTemplate& template_for(Verb verb) noexcept
{
    return kTemplates[static_cast<std::size_t>(verb)];
}

bool in_scope(Verb verb, Game game) noexcept
{
    return template_for(verb).scope == TemplateScope::Generic || game == Game::CookingWorld;
}

BoundAction bind_action(const WorldState& state, Verb verb, std::uint16_t arg0, std::uint16_t arg1)
{
    BoundAction action;
    action.verb = verb;
    action.args = {arg0, arg1};
    std::string& s = action.surface;
    s += verb_word(verb);
    switch (template_for(verb).arity) {
    case 0:
        action.args = {0, 0};
        break;
    case 1:
        action.args[1] = 0;
        s += ' ';
        if (verb == Move) {
            s += direction_name(static_cast<Direction>(arg0));
        } else {
            append_name(state, arg0, s);
        }
        break;
    default:
        s += ' ';
        append_name(state, arg0, s);
        s += " in ";
        append_name(state, arg1, s);
        break;
    }
    return action;
}

void enumerate_valid_actions(const WorldState& state, const Task& task, std::vector<BoundAction>& out)
{
    out.clear();
    if (state.terminal()) {
        return;
    }
    const Game game = game_of(task);
    const bool cooking = game == Game::CookingWorld;

    thread_local std::vector<ObjectId> visible;
    visible_objects(state, visible);
    std::sort(visible.begin(), visible.end());
    thread_local std::vector<ObjectId> held;
    held.assign(state.inventory.begin(), state.inventory.end());
    std::sort(held.begin(), held.end());

    auto push = [&](Verb v, std::uint16_t a = 0, std::uint16_t b = 0) { out.push_back(bind_action(state, v, a, b)); };
    auto idx = [](ObjectId id) { return static_cast<std::uint16_t>(id); };

    push(LookAround);
    push(Inventory);
    for (ObjectId id : visible) push(Examine, idx(id));

    const Location& room = state.here();
    for (Direction d : kDirections) {
        const Exit& e = room.exit(d);
        if (!e.present) continue;
        if (e.door != kNoObject && state.object(e.door).open == OpenState::Closed) continue;
        push(Move, static_cast<std::uint16_t>(d));
    }

    for (ObjectId id : visible) {
        const auto& obj = state.object(id);
        if ((obj.kind == ObjectKind::Container || obj.kind == ObjectKind::Door) && obj.open == OpenState::Closed) push(Open, idx(id));
    }
    for (ObjectId id : visible) {
        const auto& obj = state.object(id);
        if ((obj.kind == ObjectKind::Container || obj.kind == ObjectKind::Door) && obj.open == OpenState::Open) push(Close, idx(id));
    }
    for (ObjectId id : visible) {
        const auto& obj = state.object(id);
        if (obj.has(kTakeable) && obj.parent.kind != Parent::Kind::Inventory) push(Take, idx(id));
    }
    for (ObjectId item : held) {
        for (ObjectId box : visible) {
            if (box != item && state.object(box).is_receptacle()) push(Put, idx(item), idx(box));
        }
    }
    if (!cooking) {
        return;
    }
    for (ObjectId id : visible) {
        if (state.object(id).kind == ObjectKind::Readable) push(Read, idx(id));
    }
    for (ObjectId item : held) {
        const auto& obj = state.object(item);
        if (obj.kind != ObjectKind::Ingredient || !obj.has(kCookable) || obj.cook != CookState::Raw) continue;
        for (ObjectId app : visible) {
            if (state.object(app).kind == ObjectKind::Appliance) push(Cook, idx(item), idx(app));
        }
    }
    const bool knife = holds_knife(state);
    for (Verb v : {Chop, Slice, Dice}) {
        if (!knife) break;
        for (ObjectId id : visible) {
            const auto& obj = state.object(id);
            if (obj.kind == ObjectKind::Ingredient && obj.has(kCuttable) && obj.cut == CutState::Raw) push(v, idx(id));
        }
    }
    for (ObjectId item : held) {
        if (state.object(item).has(kEdible)) push(Eat, idx(item));
    }
    if (const auto* recipe = recipe_of(task); recipe && meal_ready_for_listing(state, *recipe)) {
        push(PrepareMeal);
    }
}

std::vector<BoundAction> enumerate_valid_actions(const WorldState& state, const Task& task)
{
    std::vector<BoundAction> out;
    enumerate_valid_actions(state, task, out);
    return out;
}

bool is_visible(const WorldState& state, ObjectId id)
{
    if (index_of(id) >= state.objects.size()) return false;
    const auto& target = state.object(id);
    if (target.kind == ObjectKind::Door) {
        for (Direction d : kDirections) {
            const Exit& e = state.here().exit(d);
            if (e.present && e.door == id) return true;
        }
        return false;
    }
    // Walk up the containment chain; every enclosing container must be open.
    Parent p = target.parent;
    for (std::size_t hops = 0; hops <= state.objects.size(); ++hops) {
        switch (p.kind) {
        case Parent::Kind::None: return false;
        case Parent::Kind::Inventory: return true;
        case Parent::Kind::Location: return location_id(p.index) == state.agent_location;
        case Parent::Kind::Object: {
            const auto& holder = state.objects[p.index];
            if (holder.kind == ObjectKind::Container && holder.open == OpenState::Closed) return false;
            p = holder.parent;
            break;
        }
        }
    }
    return false;
}

StepOutcome execute(WorldState& state, const BoundAction& action, const Task& task)
{
    StepOutcome out;
    ++state.step_count;
    const Game game = game_of(task);
    std::string& text = out.response_text;

    if (!in_scope(action.verb, game)) {
        text = "That action is not available in this game.";
        return out;
    }
    const int arity = template_for(action.verb).arity;
    for (int slot = 0; slot < arity && action.verb != Move; ++slot) {
        if (!is_visible(state, action.object(static_cast<std::size_t>(slot)))) {
            text = kNotFound;
            return out;
        }
    }

    auto accept = [&](bool changed) {
        out.accepted = true;
        out.state_changed = changed;
    };
    auto rule = [&](EffectKind kind, ObjectId subject, ObjectId target = kNoObject) {
        apply_task_rules(task, state, Effect{kind, subject, target}, out);
    };

    switch (action.verb) {
    case LookAround:
        render_observation(state, text);
        accept(false);
        break;

    case Inventory:
        render_inventory(state, text);
        accept(false);
        break;

    case Examine: {
        const auto& obj = state.object(action.object(0));
        const auto* recipe = recipe_of(task);
        if (obj.kind == ObjectKind::Readable && recipe) {
            text = recipe->text;
        } else {
            text = "You see ";
            append_description(state, obj, text);
            text += '.';
        }
        accept(false);
        break;
    }

    case Move: {
        const auto d = action.direction();
        if (static_cast<std::size_t>(d) >= 4 || !state.here().exit(d).present) {
            text = "You can't move that way.";
            break;
        }
        const Exit e = state.here().exit(d);
        if (e.door != kNoObject && state.object(e.door).open == OpenState::Closed) {
            text = "The ";
            text += state.object(e.door).name;
            text += " is closed.";
            break;
        }
        state.agent_location = e.to;
        render_observation(state, text);
        accept(true);
        break;
    }

    case Open:
    case Close: {
        auto& obj = state.object(action.object(0));
        const bool opening = action.verb == Open;
        if (obj.kind != ObjectKind::Container && obj.kind != ObjectKind::Door) {
            text = opening ? "You can't open that." : "You can't close that.";
            break;
        }
        if (obj.open == OpenState::NotOpenable) {
            text = opening ? "You can't open that." : "You can't close that.";
            break;
        }
        if (obj.open == (opening ? OpenState::Open : OpenState::Closed)) {
            text = opening ? "That is already open." : "That is already closed.";
            break;
        }
        obj.open = opening ? OpenState::Open : OpenState::Closed;
        text = opening ? "You open the " : "You close the ";
        text += obj.name;
        text += '.';
        if (opening && obj.kind == ObjectKind::Container) {
            if (obj.contents.empty()) {
                text += " It is empty.";
            } else {
                text += " The ";
                text += obj.name;
                text += " contains ";
                append_listing(state, obj.contents, text);
                text += '.';
            }
        }
        accept(true);
        break;
    }

    case Take: {
        const ObjectId id = action.object(0);
        const auto& obj = state.object(id);
        if (!obj.has(kTakeable)) {
            text = "You can't take that.";
            break;
        }
        if (state.holds(id)) {
            text = "You already have that.";
            break;
        }
        move_object(state, id, Parent::inventory());
        text = "You take the ";
        text += obj.name;
        text += '.';
        accept(true);
        rule(EffectKind::Took, id);
        break;
    }

    case Put: {
        const ObjectId item = action.object(0);
        const ObjectId box = action.object(1);
        if (!state.holds(item)) {
            text = "You need to be holding that first.";
            break;
        }
        const auto& dest = state.object(box);
        if (item == box || dest.kind != ObjectKind::Container) {
            text = "You can't put things in that.";
            break;
        }
        if (dest.open == OpenState::Closed) {
            text = "The ";
            text += dest.name;
            text += " is closed.";
            break;
        }
        move_object(state, item, Parent::object(box));
        text = "You put the ";
        text += state.object(item).name;
        text += " in the ";
        text += dest.name;
        text += '.';
        accept(true);
        rule(EffectKind::Put, item, box);
        break;
    }

    case Read: {
        const auto& obj = state.object(action.object(0));
        const auto* recipe = recipe_of(task);
        if (obj.kind != ObjectKind::Readable || !recipe) {
            text = "There is nothing to read on that.";
            break;
        }
        text = recipe->text;
        accept(false);
        break;
    }

    case Cook: {
        const ObjectId item = action.object(0);
        auto& food = state.object(item);
        const auto& appliance = state.object(action.object(1));
        if (!state.holds(item) || food.kind != ObjectKind::Ingredient || !food.has(kCookable)) {
            text = "You need to be holding something cookable.";
            break;
        }
        if (appliance.kind != ObjectKind::Appliance) {
            text = "You can't cook with that.";
            break;
        }
        if (food.cook != CookState::Raw) {
            text = "That has already been cooked.";
            break;
        }
        food.cook = cook_state_for_appliance(appliance.name);
        text = "You ";
        text += cook_verb(food.cook);
        text += " the ";
        text += food.name;
        text += " with the ";
        text += appliance.name;
        text += '.';
        accept(true);
        rule(EffectKind::Cooked, item, action.object(1));
        break;
    }

    case Chop:
    case Slice:
    case Dice: {
        const ObjectId id = action.object(0);
        auto& food = state.object(id);
        if (food.kind != ObjectKind::Ingredient || !food.has(kCuttable)) {
            text = "You can't cut that.";
            break;
        }
        if (food.cut != CutState::Raw) {
            text = "That has already been cut.";
            break;
        }
        if (!holds_knife(state)) {
            text = "You need a knife to do that.";
            break;
        }
        food.cut = cut_for(action.verb);
        text = "You ";
        text += verb_word(action.verb);
        text += " the ";
        text += food.name;
        text += '.';
        accept(true);
        rule(EffectKind::Cut, id);
        break;
    }

    case Eat: {
        const ObjectId id = action.object(0);
        const auto& food = state.object(id);
        if (!food.has(kEdible)) {
            text = "That's not edible.";
            break;
        }
        if (!state.holds(id)) {
            text = "You need to be holding that first.";
            break;
        }
        text = "You eat the ";
        text += food.name;
        text += '.';
        detach(state, id);
        accept(true);
        rule(EffectKind::Ate, id);
        break;
    }

    case PrepareMeal: {
        const auto* recipe = recipe_of(task);
        if (!recipe || recipe->ingredients.empty()) {
            text = "There is no recipe to follow.";
            break;
        }
        if (state.here().kind != RoomKind::Kitchen) {
            text = "You can only prepare a meal in the kitchen.";
            break;
        }
        bool ready = true;
        for (const auto& ing : recipe->ingredients) {
            const auto& obj = state.object(ing.object);
            ready = ready && state.holds(ing.object) && obj.cut == ing.required.cut && obj.cook == ing.required.cook;
        }
        if (!ready) {
            text = "You don't have all the ingredients prepared as the recipe directs.";
            break;
        }
        for (const auto& ing : recipe->ingredients) {
            detach(state, ing.object);
        }
        GameObject meal;
        meal.name = kMealName;
        meal.kind = ObjectKind::Item;
        meal.traits = kTakeable | kEdible | kMeal;
        const ObjectId meal_id = add_object(state, std::move(meal), Parent::inventory());
        text = "The meal has been added to your inventory.";
        accept(true);
        rule(EffectKind::PreparedMeal, meal_id);
        break;
    }
    }

    finish_terminal_text(out);
    return out;
}

std::string normalize_command(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) break;
        std::string word;
        word.reserve(i - start);
        for (std::size_t k = start; k < i; ++k) {
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(text[k])));
        }
        if (word == "the" || word == "a" || word == "an") continue;
        if (word == "with") word = "in";
        if (!out.empty()) out += ' ';
        out += word;
    }
    return out;
}

std::optional<std::size_t> match_input(std::string_view input, std::span<const BoundAction> valid)
{
    for (std::size_t i = 0; i < valid.size(); ++i) {
        if (valid[i].surface == input) return i;
    }
    const std::string wanted = normalize_command(input);
    if (wanted.empty()) return std::nullopt;
    for (std::size_t i = 0; i < valid.size(); ++i) {
        if (normalize_command(valid[i].surface) == wanted) return i;
    }
    return std::nullopt;
}

} // namespace wordsim
