#pragma once

// Shared test oracles. They use only the public model types and re-derive
// answers the slow way, independent of the optimized engine paths.

#include "wordsim/actions.hpp"
#include "wordsim/games.hpp"
#include "wordsim/mapgen.hpp"
#include "wordsim/precrawl.hpp"
#include "wordsim/session.hpp"
#include "wordsim/variation.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

namespace wordsim::testing {

// Template x referent brute force: bind every argument combination and keep the
// ones whose execution on a scratch copy is accepted.
inline std::vector<std::string> brute_force_valid(const WorldState& state, const Task& task)
{
    std::vector<std::string> out;
    if (state.terminal()) return out;
    const Game game = game_of(task);
    const auto n = static_cast<std::uint16_t>(state.objects.size());
    auto accepted = [&](const BoundAction& a) {
        WorldState scratch = state;
        return execute(scratch, a, task).accepted;
    };
    for (const ActionTemplate& t : action_templates()) {
        if (!in_scope(t.verb, game)) continue;
        if (t.arity == 0) {
            const BoundAction a = bind_action(state, t.verb);
            if (accepted(a)) out.push_back(a.surface);
        } else if (t.slots[0] == SlotKind::Direction) {
            for (Direction d : kDirections) {
                const BoundAction a = bind_action(state, t.verb, static_cast<std::uint16_t>(d));
                if (accepted(a)) out.push_back(a.surface);
            }
        } else if (t.arity == 1) {
            for (std::uint16_t i = 0; i < n; ++i) {
                const BoundAction a = bind_action(state, t.verb, i);
                if (accepted(a)) out.push_back(a.surface);
            }
        } else {
            for (std::uint16_t i = 0; i < n; ++i) {
                for (std::uint16_t j = 0; j < n; ++j) {
                    const BoundAction a = bind_action(state, t.verb, i, j);
                    if (accepted(a)) out.push_back(a.surface);
                }
            }
        }
    }
    return out;
}

inline std::vector<std::string> surfaces(const std::vector<BoundAction>& actions)
{
    std::vector<std::string> out;
    for (const auto& a : actions) out.push_back(a.surface);
    return out;
}

// Breadth-first room distances over the layout's edge list.
inline std::vector<int> layout_distances(const MapLayout& layout, std::size_t from)
{
    std::vector<int> dist(layout.cells.size(), -1);
    std::deque<std::size_t> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        for (const MapEdge& e : layout.edges) {
            std::size_t next = layout.cells.size();
            if (e.a == at) next = e.b;
            if (e.b == at) next = e.a;
            if (next < dist.size() && dist[next] < 0) {
                dist[next] = dist[at] + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

inline std::vector<StepResult> run_transcript(Session& session, const std::vector<std::string>& actions)
{
    std::vector<StepResult> out{session.reset()};
    for (const auto& a : actions) out.push_back(session.step(a));
    return out;
}

// Random walk of the given length over valid actions from the episode start.
inline WorldState random_state(const Episode& episode, Rng& rng, int steps)
{
    WorldState state = episode.initial;
    for (int i = 0; i < steps && !state.terminal(); ++i) {
        const auto valid = enumerate_valid_actions(state, episode.task);
        if (valid.empty()) break;
        advance(state, valid[static_cast<std::size_t>(rng.below(valid.size()))], episode.task);
    }
    return state;
}

} // namespace wordsim::testing
