#include "wordsim/library.hpp"

#include "wordsim/rng.hpp"

#include <stdexcept>
#include <string>

namespace wordsim {

namespace {

constexpr std::uint8_t C = kCuttable;
constexpr std::uint8_t K = kCookable;
constexpr std::uint8_t R = kShowsRaw;

struct RawFixture {
    std::string_view name;
    RoomKind room;
    ObjectKind kind;
    OpenState open;
};

constexpr auto Box = ObjectKind::Container;
constexpr auto App = ObjectKind::Appliance;
constexpr auto Shut = OpenState::Closed;
constexpr auto Flat = OpenState::NotOpenable;

// Listing order is room insertion order, which fixes rendering order.
constexpr RawFixture kFixtures[] = {
    {"fridge", RoomKind::Kitchen, Box, Shut},
    {"dining chair", RoomKind::Kitchen, Box, Flat},
    {"dishwasher", RoomKind::Kitchen, Box, Shut},
    {"trash can", RoomKind::Kitchen, Box, Shut},
    {"oven", RoomKind::Kitchen, App, Flat},
    {"cutlery drawer", RoomKind::Kitchen, Box, Shut},
    {"stove", RoomKind::Kitchen, App, Flat},
    {"counter", RoomKind::Kitchen, Box, Flat},
    {"kitchen cupboard", RoomKind::Kitchen, Box, Shut},

    {"shelf", RoomKind::Pantry, Box, Flat},
    {"folding chair", RoomKind::Pantry, Box, Flat},

    {"barbeque", RoomKind::Backyard, App, Flat},
    {"patio chair", RoomKind::Backyard, Box, Flat},
    {"clothes line", RoomKind::Backyard, Box, Flat},
    {"garden", RoomKind::Backyard, Box, Flat},
    {"workbench", RoomKind::Backyard, Box, Flat},
    {"patio table", RoomKind::Backyard, Box, Flat},

    {"shoe cabinet", RoomKind::Corridor, Box, Shut},
    {"key holder", RoomKind::Corridor, Box, Flat},
    {"hat rack", RoomKind::Corridor, Box, Flat},
    {"umbrella stand", RoomKind::Corridor, Box, Flat},
    {"coat hanger", RoomKind::Corridor, Box, Flat},

    {"bed", RoomKind::Bedroom, Box, Flat},
    {"wardrobe", RoomKind::Bedroom, Box, Shut},
    {"chest of drawers", RoomKind::Bedroom, Box, Shut},
    {"night stand", RoomKind::Bedroom, Box, Flat},
    {"dressing table", RoomKind::Bedroom, Box, Flat},
    {"desk", RoomKind::Bedroom, Box, Flat},

    {"bathroom cabinet", RoomKind::Bathroom, Box, Shut},
    {"towel rack", RoomKind::Bathroom, Box, Flat},
    {"sink", RoomKind::Bathroom, Box, Flat},
    {"bath mat", RoomKind::Bathroom, Box, Flat},
    {"toilet roll holder", RoomKind::Bathroom, Box, Flat},
    {"bathtub", RoomKind::Bathroom, Box, Flat},

    {"sofa", RoomKind::LivingRoom, Box, Flat},
    {"armchair", RoomKind::LivingRoom, Box, Flat},
    {"bookcase", RoomKind::LivingRoom, Box, Flat},
    {"coffee table", RoomKind::LivingRoom, Box, Flat},
    {"end table", RoomKind::LivingRoom, Box, Flat},
    {"tv stand", RoomKind::LivingRoom, Box, Flat},

    {"washing machine", RoomKind::LaundryRoom, Box, Shut},
    {"clothes drier", RoomKind::LaundryRoom, Box, Shut},
    {"laundry basket", RoomKind::LaundryRoom, Box, Flat},
    {"suspended shelf", RoomKind::LaundryRoom, Box, Flat},
    {"work table", RoomKind::LaundryRoom, Box, Flat},

    {"bicycle rack", RoomKind::Driveway, Box, Flat},

    {"street bench", RoomKind::Street, Box, Flat},

    {"showcase", RoomKind::Supermarket, Box, Flat},
    {"freezer", RoomKind::Supermarket, Box, Shut},
};

struct RawIngredient {
    std::string_view name;
    std::uint8_t traits;
    std::string_view locations; // '|' separated fixture names
};

// Stand-in ingredient pool modelled on the cooking-game food lists.
constexpr RawIngredient kIngredients[] = {
    {"purple potato", C | K | R, "garden|fridge|counter|showcase"},
    {"red potato", C | K | R, "garden|kitchen cupboard|showcase"},
    {"yellow potato", C | K | R, "garden|counter|shelf"},
    {"sweet potato", C | K | R, "garden|kitchen cupboard|shelf"},
    {"yellow bell pepper", C | K, "garden|fridge|counter|showcase"},
    {"red bell pepper", C | K, "garden|fridge|showcase"},
    {"green bell pepper", C | K, "garden|fridge|counter"},
    {"orange bell pepper", C | K, "garden|fridge|showcase"},
    {"red hot pepper", C | K, "garden|counter|fridge"},
    {"green hot pepper", C | K, "garden|counter|showcase"},
    {"green apple", C | K, "counter|fridge|showcase"},
    {"red apple", C | K, "counter|fridge|showcase"},
    {"yellow apple", C | K, "counter|fridge|shelf"},
    {"carrot", C | K, "garden|fridge|showcase"},
    {"purple carrot", C | K, "garden|fridge"},
    {"white onion", C | K, "garden|kitchen cupboard|shelf"},
    {"red onion", C | K, "garden|kitchen cupboard|showcase"},
    {"yellow onion", C | K, "garden|counter|shelf"},
    {"shallot", C | K, "kitchen cupboard|shelf"},
    {"garlic clove", C | K, "kitchen cupboard|shelf|showcase"},
    {"red tomato", C | K, "garden|counter|fridge"},
    {"cherry tomato", C | K, "garden|fridge|showcase"},
    {"green tomato", C | K, "garden|counter"},
    {"cucumber", C | K, "garden|fridge|showcase"},
    {"zucchini", C | K, "garden|fridge|showcase"},
    {"eggplant", C | K, "garden|counter|showcase"},
    {"pumpkin", C | K, "garden|counter|shelf"},
    {"butternut squash", C | K, "garden|counter"},
    {"broccoli", C | K, "garden|fridge|showcase"},
    {"cauliflower", C | K, "garden|fridge"},
    {"cabbage", C | K, "garden|fridge|showcase"},
    {"red cabbage", C | K, "garden|fridge"},
    {"lettuce", C | K, "garden|fridge|showcase"},
    {"iceberg lettuce", C | K, "garden|fridge"},
    {"spinach", C | K, "garden|fridge"},
    {"kale", C | K, "garden|fridge"},
    {"celery", C | K, "garden|fridge|showcase"},
    {"leek", C | K, "garden|fridge"},
    {"asparagus", C | K, "garden|fridge|showcase"},
    {"artichoke", C | K, "garden|counter"},
    {"beetroot", C | K | R, "garden|fridge"},
    {"parsnip", C | K | R, "garden|counter"},
    {"turnip", C | K | R, "garden|kitchen cupboard"},
    {"radish", C | K, "garden|fridge"},
    {"corn cob", C | K, "garden|counter|showcase"},
    {"green bean", C | K, "garden|fridge"},
    {"snow pea", C | K, "garden|fridge"},
    {"white mushroom", C | K, "fridge|showcase"},
    {"portobello mushroom", C | K, "fridge|showcase"},
    {"fennel bulb", C | K, "garden|fridge"},
    {"chicken breast", C | K | R, "fridge|showcase|freezer"},
    {"chicken leg", C | K | R, "fridge|freezer"},
    {"chicken wing", C | K | R, "fridge|freezer|showcase"},
    {"pork chop", C | K | R, "fridge|freezer|showcase"},
    {"pork loin", C | K | R, "fridge|freezer"},
    {"beef steak", C | K | R, "fridge|freezer|showcase"},
    {"beef brisket", C | K | R, "fridge|freezer"},
    {"lamb chop", C | K | R, "fridge|freezer"},
    {"turkey breast", C | K | R, "fridge|freezer"},
    {"duck breast", C | K | R, "fridge|freezer"},
    {"sausage", C | K | R, "fridge|freezer|showcase"},
    {"bacon strip", C | K | R, "fridge|freezer"},
    {"salmon fillet", C | K | R, "fridge|freezer|showcase"},
    {"tuna steak", C | K | R, "fridge|freezer"},
    {"cod fillet", C | K | R, "fridge|freezer"},
    {"shrimp", C | K | R, "fridge|freezer|showcase"},
    {"scallop", C | K | R, "fridge|freezer"},
    {"tofu", C | K, "fridge|showcase"},
    {"tempeh", C | K, "fridge"},
    {"block of cheese", C | K, "fridge|showcase"},
    {"mozzarella", C | K, "fridge|showcase"},
    {"halloumi", C | K, "fridge"},
    {"banana", C | K, "counter|showcase|shelf"},
    {"plantain", C | K, "counter|shelf"},
    {"pineapple", C | K, "counter|showcase"},
    {"mango", C | K, "counter|fridge"},
    {"peach", C | K, "counter|fridge|showcase"},
    {"pear", C | K, "counter|fridge"},
    {"plum", C | K, "counter|fridge"},
    {"orange", C | K, "counter|fridge|showcase"},
    {"lemon", C | K, "counter|fridge|showcase"},
    {"lime", C | K, "counter|fridge"},
    {"grapefruit", C | K, "counter|fridge"},
    {"avocado", C | K, "counter|fridge|showcase"},
    {"fig", C | K, "counter|fridge"},
    {"apricot", C | K, "counter|fridge"},
    {"nectarine", C | K, "counter|fridge"},
    {"kiwi", C | K, "counter|fridge"},
    {"coconut", C | K, "counter|shelf"},
    {"watermelon", C | K, "counter|garden"},
    {"cantaloupe", C | K, "counter|garden"},
    {"strawberry", C | K, "garden|fridge"},
    {"baguette", C | K, "counter|kitchen cupboard|showcase"},
    {"loaf of bread", C | K, "counter|kitchen cupboard|shelf"},
    {"bagel", C | K, "counter|kitchen cupboard"},
    {"tortilla", C | K, "kitchen cupboard|shelf"},
    {"pita bread", C | K, "kitchen cupboard|shelf"},
    {"ginger root", C | K, "counter|kitchen cupboard"},
    {"chili pepper", C | K, "garden|counter"},
    {"jalapeno", C | K, "garden|fridge"},
    {"parsley", C, "garden|fridge"},
    {"cilantro", C, "garden|fridge"},
    {"basil", C, "garden|fridge"},
    {"mint", C, "garden|fridge"},
    {"rosemary", C, "garden|counter"},
    {"thyme", C, "garden|counter"},
    {"chive", C, "garden|fridge"},
    {"dill", C, "garden|fridge"},
    {"hard-boiled egg", C, "fridge"},
    {"egg", K, "fridge|showcase"},
    {"milk", 0, "fridge|showcase"},
    {"cream", 0, "fridge"},
    {"butter", K, "fridge|showcase"},
    {"yogurt", 0, "fridge|showcase"},
    {"water", 0, "counter|shelf"},
    {"orange juice", 0, "fridge|showcase"},
    {"salt", 0, "kitchen cupboard|shelf|showcase"},
    {"black pepper", 0, "kitchen cupboard|shelf|showcase"},
    {"sugar", 0, "kitchen cupboard|shelf"},
    {"flour", 0, "kitchen cupboard|shelf|showcase"},
    {"olive oil", 0, "kitchen cupboard|shelf|showcase"},
    {"vegetable oil", 0, "kitchen cupboard|shelf"},
    {"sesame oil", 0, "kitchen cupboard|shelf"},
    {"soy sauce", 0, "kitchen cupboard|shelf"},
    {"vinegar", 0, "kitchen cupboard|shelf"},
    {"honey", 0, "kitchen cupboard|shelf"},
    {"maple syrup", 0, "kitchen cupboard|shelf"},
    {"ketchup", 0, "fridge|shelf"},
    {"mustard", 0, "fridge|shelf"},
    {"mayonnaise", 0, "fridge|shelf"},
    {"chicken stock", 0, "kitchen cupboard|shelf"},
    {"rice", K, "kitchen cupboard|shelf"},
    {"pasta", K, "kitchen cupboard|shelf"},
    {"noodles", K, "kitchen cupboard|shelf"},
    {"couscous", K, "kitchen cupboard|shelf"},
    {"lentils", K, "kitchen cupboard|shelf"},
    {"chickpeas", K, "kitchen cupboard|shelf"},
    {"black beans", K, "kitchen cupboard|shelf"},
    {"oats", K, "kitchen cupboard|shelf"},
    {"quinoa", K, "kitchen cupboard|shelf"},
    {"walnut", C | K, "kitchen cupboard|shelf"},
    {"almond", C | K, "kitchen cupboard|shelf"},
    {"peanut", K, "kitchen cupboard|shelf"},
    {"cashew", K, "kitchen cupboard|shelf"},
    {"dark chocolate", C, "kitchen cupboard|shelf"},
    {"marshmallow", K, "kitchen cupboard|shelf"},
};

struct RawHousehold {
    std::string_view name;
    std::string_view destinations; // '|' separated
};

// Household objects and their canonical destinations, in the spirit of
// ConceptNet AtLocation pairs (dirty dish -> dishwasher).
constexpr RawHousehold kHousehold[] = {
    {"leftover pizza", "fridge"},
    {"carton of juice", "fridge"},
    {"bottle of soda", "fridge"},
    {"jar of pickles", "fridge"},
    {"tub of margarine", "fridge"},
    {"yogurt cup", "fridge"},
    {"egg carton", "fridge"},
    {"pitcher of lemonade", "fridge"},
    {"wedge of brie", "fridge"},
    {"tray of ice cubes", "fridge"},
    {"dirty dish", "dishwasher"},
    {"dirty plate", "dishwasher"},
    {"dirty cup", "dishwasher"},
    {"dirty mug", "dishwasher"},
    {"dirty bowl", "dishwasher"},
    {"dirty fork", "dishwasher"},
    {"dirty spoon", "dishwasher"},
    {"dirty butter knife", "dishwasher"},
    {"dirty pan", "dishwasher"},
    {"dirty glass", "dishwasher"},
    {"dirty saucepan", "dishwasher"},
    {"dirty wine glass", "dishwasher"},
    {"dirty cutting board", "dishwasher"},
    {"clean plate", "kitchen cupboard"},
    {"clean bowl", "kitchen cupboard"},
    {"clean mug", "kitchen cupboard"},
    {"clean glass", "kitchen cupboard"},
    {"clean cup", "kitchen cupboard"},
    {"clean saucepan", "kitchen cupboard"},
    {"clean frying pan", "kitchen cupboard"},
    {"clean casserole dish", "kitchen cupboard"},
    {"clean serving platter", "kitchen cupboard"},
    {"clean teapot", "kitchen cupboard"},
    {"clean fork", "cutlery drawer"},
    {"clean spoon", "cutlery drawer"},
    {"clean teaspoon", "cutlery drawer"},
    {"clean ladle", "cutlery drawer"},
    {"clean whisk", "cutlery drawer"},
    {"clean spatula", "cutlery drawer"},
    {"clean tongs", "cutlery drawer"},
    {"clean peeler", "cutlery drawer"},
    {"clean can opener", "cutlery drawer"},
    {"clean steak knife", "cutlery drawer"},
    {"empty can", "trash can"},
    {"banana peel", "trash can"},
    {"used tissue", "trash can"},
    {"empty bottle", "trash can"},
    {"crumpled paper", "trash can"},
    {"empty chip bag", "trash can"},
    {"apple core", "trash can"},
    {"broken glass", "trash can"},
    {"old newspaper", "trash can"},
    {"used teabag", "trash can"},
    {"eggshells", "trash can"},
    {"moldy bread", "trash can"},
    {"fruit bowl", "counter"},
    {"paper towel roll", "counter"},
    {"toaster", "counter"},
    {"coffee maker", "counter"},
    {"dish rack", "counter"},
    {"napkin holder", "dining chair|counter"},
    {"seat pad", "dining chair"},
    {"toothbrush", "bathroom cabinet"},
    {"toothpaste", "bathroom cabinet"},
    {"dental floss", "bathroom cabinet"},
    {"hairbrush", "bathroom cabinet|dressing table"},
    {"comb", "bathroom cabinet|dressing table"},
    {"razor", "bathroom cabinet"},
    {"shaving cream", "bathroom cabinet"},
    {"mouthwash", "bathroom cabinet"},
    {"deodorant", "bathroom cabinet"},
    {"sunscreen", "bathroom cabinet"},
    {"nail clippers", "bathroom cabinet"},
    {"cotton swabs", "bathroom cabinet"},
    {"hand cream", "bathroom cabinet"},
    {"box of bandages", "bathroom cabinet"},
    {"bottle of aspirin", "bathroom cabinet"},
    {"clean towel", "towel rack"},
    {"hand towel", "towel rack"},
    {"bath towel", "towel rack"},
    {"washcloth", "towel rack"},
    {"face cloth", "towel rack"},
    {"bar of soap", "sink"},
    {"soap dispenser", "sink"},
    {"nail brush", "sink"},
    {"rubber duck", "bathtub"},
    {"bath sponge", "bathtub"},
    {"loofah", "bathtub"},
    {"bottle of shampoo", "bathtub"},
    {"bottle of conditioner", "bathtub"},
    {"toilet paper", "toilet roll holder"},
    {"spare toilet roll", "toilet roll holder"},
    {"bath slippers", "bath mat"},
    {"clean shirt", "wardrobe"},
    {"clean pants", "wardrobe"},
    {"clean dress", "wardrobe"},
    {"clean sweater", "wardrobe"},
    {"clean skirt", "wardrobe"},
    {"clean blouse", "wardrobe"},
    {"suit jacket", "wardrobe"},
    {"necktie", "wardrobe"},
    {"silk scarf", "wardrobe"},
    {"evening gown", "wardrobe"},
    {"clean socks", "chest of drawers"},
    {"clean underwear", "chest of drawers"},
    {"clean t-shirt", "chest of drawers"},
    {"pajamas", "chest of drawers|bed"},
    {"clean shorts", "chest of drawers"},
    {"leggings", "chest of drawers"},
    {"tank top", "chest of drawers"},
    {"stockings", "chest of drawers"},
    {"wool gloves", "chest of drawers"},
    {"pillow", "bed"},
    {"blanket", "bed"},
    {"teddy bear", "bed"},
    {"duvet", "bed"},
    {"clean bedsheet", "bed"},
    {"alarm clock", "night stand"},
    {"reading glasses", "night stand"},
    {"bedside lamp", "night stand"},
    {"diary", "night stand|desk"},
    {"phone charger", "night stand|desk"},
    {"glass of water", "night stand"},
    {"perfume", "dressing table"},
    {"lipstick", "dressing table"},
    {"makeup kit", "dressing table"},
    {"jewelry box", "dressing table"},
    {"hair dryer", "dressing table"},
    {"pearl necklace", "dressing table"},
    {"earrings", "dressing table"},
    {"bracelet", "dressing table"},
    {"hairband", "dressing table"},
    {"laptop", "desk"},
    {"notebook", "desk"},
    {"pencil", "desk"},
    {"ballpoint pen", "desk"},
    {"stapler", "desk"},
    {"ruler", "desk"},
    {"calculator", "desk"},
    {"eraser", "desk"},
    {"sticky notes", "desk"},
    {"novel", "bookcase"},
    {"dictionary", "bookcase"},
    {"textbook", "bookcase"},
    {"photo album", "bookcase"},
    {"magazine", "bookcase|coffee table"},
    {"encyclopedia", "bookcase"},
    {"comic book", "bookcase"},
    {"atlas", "bookcase"},
    {"poetry book", "bookcase"},
    {"biography", "bookcase"},
    {"cushion", "sofa|armchair"},
    {"throw blanket", "sofa"},
    {"sofa pillow", "sofa"},
    {"tv remote", "coffee table"},
    {"coasters", "coffee table"},
    {"board game", "coffee table"},
    {"deck of cards", "coffee table"},
    {"jigsaw puzzle", "coffee table"},
    {"video game console", "tv stand"},
    {"dvd", "tv stand"},
    {"game controller", "tv stand"},
    {"soundbar", "tv stand"},
    {"table lamp", "end table"},
    {"picture frame", "end table"},
    {"scented candle", "end table"},
    {"potted plant", "end table"},
    {"knitting needles", "armchair"},
    {"ball of yarn", "armchair"},
    {"dirty shirt", "washing machine"},
    {"dirty socks", "washing machine"},
    {"dirty pants", "washing machine"},
    {"dirty towel", "washing machine"},
    {"dirty jeans", "washing machine"},
    {"dirty sweater", "washing machine"},
    {"dirty dress", "washing machine"},
    {"dirty bedsheet", "washing machine"},
    {"dirty t-shirt", "washing machine"},
    {"dirty hoodie", "washing machine"},
    {"dirty pajamas", "washing machine"},
    {"dirty apron", "washing machine"},
    {"muddy trousers", "washing machine"},
    {"wet shirt", "clothes drier|clothes line"},
    {"wet towel", "clothes drier|clothes line"},
    {"wet socks", "clothes drier"},
    {"wet jeans", "clothes drier"},
    {"wet dress", "clothes drier"},
    {"wet bedsheet", "clothes drier|clothes line"},
    {"wet hoodie", "clothes drier"},
    {"wet swimsuit", "clothes line"},
    {"wet beach towel", "clothes line"},
    {"wet blanket", "clothes line"},
    {"pile of clean laundry", "laundry basket"},
    {"odd sock", "laundry basket"},
    {"laundry detergent", "suspended shelf"},
    {"fabric softener", "suspended shelf"},
    {"bottle of bleach", "suspended shelf"},
    {"stain remover", "suspended shelf"},
    {"clothes pegs", "suspended shelf|clothes line"},
    {"lint roller", "suspended shelf"},
    {"steam iron", "suspended shelf|work table"},
    {"starch spray", "suspended shelf"},
    {"sewing kit", "work table"},
    {"measuring tape", "work table"},
    {"pinking shears", "work table"},
    {"sneakers", "shoe cabinet"},
    {"leather boots", "shoe cabinet"},
    {"sandals", "shoe cabinet"},
    {"slippers", "shoe cabinet"},
    {"high heels", "shoe cabinet"},
    {"dress shoes", "shoe cabinet"},
    {"rain boots", "shoe cabinet"},
    {"running shoes", "shoe cabinet"},
    {"loafers", "shoe cabinet"},
    {"flip flops", "shoe cabinet"},
    {"baseball cap", "hat rack"},
    {"sun hat", "hat rack"},
    {"beanie", "hat rack"},
    {"fedora", "hat rack"},
    {"straw hat", "hat rack"},
    {"umbrella", "umbrella stand"},
    {"walking cane", "umbrella stand"},
    {"golf umbrella", "umbrella stand"},
    {"raincoat", "coat hanger"},
    {"winter coat", "coat hanger"},
    {"leather jacket", "coat hanger"},
    {"trench coat", "coat hanger"},
    {"cardigan", "coat hanger|wardrobe"},
    {"house keys", "key holder"},
    {"car keys", "key holder"},
    {"padlock key", "key holder"},
    {"hammer", "workbench"},
    {"screwdriver", "workbench"},
    {"wrench", "workbench"},
    {"pliers", "workbench"},
    {"hand saw", "workbench"},
    {"power drill", "workbench"},
    {"sandpaper", "workbench"},
    {"paintbrush", "workbench"},
    {"box of nails", "workbench"},
    {"sunglasses", "patio table"},
    {"flower pot", "patio table"},
    {"citronella candle", "patio table"},
    {"outdoor cushion", "patio chair"},
    {"watering can", "garden"},
    {"trowel", "garden"},
    {"garden hose", "garden"},
    {"rake", "garden"},
    {"gardening gloves", "garden"},
    {"seed packet", "garden"},
    {"shovel", "garden"},
    {"pruning shears", "garden"},
};

constexpr std::string_view kDoors[] = {
    "wooden door",     "sliding door",       "screen door",       "glass door",
    "frosted-glass door", "fiberglass door", "plain door",        "sliding patio door",
    "front door",      "barn door",          "french door",       "oak door",
    "pine door",       "painted door",       "louvered door",     "metal door",
    "red door",        "blue door",          "white door",        "arched door",
};

std::vector<std::string_view> split(std::string_view text)
{
    std::vector<std::string_view> out;
    while (!text.empty()) {
        auto bar = text.find('|');
        out.push_back(text.substr(0, bar));
        if (bar == std::string_view::npos) {
            break;
        }
        text.remove_prefix(bar + 1);
    }
    return out;
}

// Held-out ingredients: roughly 70% shared, 10% in each fold alone.
FoldMask ingredient_folds(std::size_t ordinal)
{
    switch (ordinal % 10) {
    case 3: return fold_bit(Fold::Train);
    case 6: return fold_bit(Fold::Dev);
    case 9: return fold_bit(Fold::Test);
    default: return kAllFolds;
    }
}

// Round-robin within each destination group so every group contributes to every fold.
Fold household_fold(std::size_t ordinal_in_group)
{
    switch (ordinal_in_group % 7) {
    case 1: return Fold::Dev;
    case 2: return Fold::Test;
    default: return Fold::Train;
    }
}

} // namespace

std::string_view cut_verb(CutState c) noexcept
{
    switch (c) {
    case CutState::Chopped: return "chop";
    case CutState::Sliced: return "slice";
    case CutState::Diced: return "dice";
    case CutState::Raw: break;
    }
    return "";
}

std::string_view cut_adjective(CutState c) noexcept
{
    switch (c) {
    case CutState::Chopped: return "chopped";
    case CutState::Sliced: return "sliced";
    case CutState::Diced: return "diced";
    case CutState::Raw: break;
    }
    return "";
}

std::string_view cook_verb(CookState c) noexcept
{
    switch (c) {
    case CookState::Fried: return "fry";
    case CookState::Roasted: return "roast";
    case CookState::Barbequed: return "barbeque";
    case CookState::Raw: break;
    }
    return "";
}

std::string_view cook_adjective(CookState c) noexcept
{
    switch (c) {
    case CookState::Fried: return "fried";
    case CookState::Roasted: return "roasted";
    case CookState::Barbequed: return "barbequed";
    case CookState::Raw: break;
    }
    return "";
}

CookState cook_state_for_appliance(std::string_view appliance) noexcept
{
    if (appliance == "stove") return CookState::Fried;
    if (appliance == "oven") return CookState::Roasted;
    if (appliance == "barbeque") return CookState::Barbequed;
    return CookState::Raw;
}

std::string_view appliance_for(CookState c) noexcept
{
    switch (c) {
    case CookState::Fried: return "stove";
    case CookState::Roasted: return "oven";
    case CookState::Barbequed: return "barbeque";
    case CookState::Raw: break;
    }
    return "";
}

const ObjectLibrary& ObjectLibrary::instance()
{
    static const ObjectLibrary library;
    return library;
}

ObjectLibrary::ObjectLibrary()
{
    auto add_entry = [this](CatalogEntry entry) {
        if (!by_name_.emplace(entry.name, entries_.size()).second) {
            throw std::logic_error("duplicate catalog name: " + std::string(entry.name));
        }
        entries_.push_back(std::move(entry));
    };

    for (const auto& f : kFixtures) {
        fixtures_by_room_[static_cast<std::size_t>(f.room)].push_back({f.name, f.room, f.kind, f.open});
        add_entry({f.name, f.kind, {room_name(f.room)}, kAllFolds});
    }

    for (std::size_t i = 0; i < std::size(kIngredients); ++i) {
        const auto& raw = kIngredients[i];
        IngredientSpec spec{raw.name, raw.traits, split(raw.locations), ingredient_folds(i)};
        add_entry({spec.name, ObjectKind::Ingredient, spec.locations, spec.folds});
        ingredients_.push_back(std::move(spec));
    }

    std::unordered_map<std::string_view, std::size_t> group_counts;
    for (const auto& raw : kHousehold) {
        auto destinations = split(raw.destinations);
        const Fold fold = household_fold(group_counts[destinations.front()]++);
        add_entry({raw.name, ObjectKind::Item, destinations, fold_bit(fold)});
        household_.push_back({raw.name, std::move(destinations), fold});
    }

    for (auto door : kDoors) {
        door_names_.push_back(door);
        add_entry({door, ObjectKind::Door, {}, kAllFolds});
    }

    add_entry({kCoinName, ObjectKind::Coin, {}, kAllFolds});
    add_entry({kKnifeName, ObjectKind::Item, {"cutlery drawer", "kitchen cupboard", "counter"}, kAllFolds});
    add_entry({kCookbookName, ObjectKind::Readable, {"counter"}, kAllFolds});
    add_entry({kMealName, ObjectKind::Item, {}, kAllFolds});

    // Preparation combinations: single-fold ingredients keep all of theirs; shared
    // ingredients split their combinations 70/15/15 by a fixed hash.
    preparations_.resize(ingredients_.size());
    for (std::size_t i = 0; i < ingredients_.size(); ++i) {
        const auto& ing = ingredients_[i];
        for (int c = 0; c < 4; ++c) {
            if (c != 0 && (ing.traits & kCuttable) == 0) continue;
            for (int k = 0; k < 4; ++k) {
                if (k != 0 && (ing.traits & kCookable) == 0) continue;
                Preparation prep{static_cast<CutState>(c), static_cast<CookState>(k)};
                const Fold fold = fold_of_combination(i, prep);
                preparations_[i][static_cast<std::size_t>(fold)].push_back(prep);
            }
        }
    }
}

Fold ObjectLibrary::fold_of_combination(std::size_t ingredient, Preparation prep) const noexcept
{
    const auto& ing = ingredients_[ingredient];
    if (ing.folds != kAllFolds) {
        for (Fold f : {Fold::Train, Fold::Dev, Fold::Test}) {
            if (ing.folds & fold_bit(f)) return f;
        }
    }
    std::uint64_t h = fnv1a(ing.name);
    h = fnv1a(cut_adjective(prep.cut), h ^ 0x2F);
    h = fnv1a(cook_adjective(prep.cook), h ^ 0x3A);
    const auto bucket = Rng::mix(h) % 20;
    if (bucket < 14) return Fold::Train;
    if (bucket < 17) return Fold::Dev;
    return Fold::Test;
}

const CatalogEntry* ObjectLibrary::find(std::string_view name) const noexcept
{
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &entries_[it->second];
}

const FixtureSpec* ObjectLibrary::find_fixture(std::string_view name) const noexcept
{
    for (const auto& room : fixtures_by_room_) {
        for (const auto& f : room) {
            if (f.name == name) return &f;
        }
    }
    return nullptr;
}

} // namespace wordsim
