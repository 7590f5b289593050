#ifndef EXERGEN_MACHINE_HPP
#define EXERGEN_MACHINE_HPP

#include <string>
#include <vector>

namespace exergen {

// Moore machine: every state carries an output label, every (state, symbol)
// pair has a transition once generation totalizes the map.
struct FsmSpec {
    std::vector<std::string> states;
    std::vector<std::string> outputs; // one per state
    std::vector<std::string> alphabet;
    int initial = 0;
    // next[state][symbol] -> state; -1 only while under construction.
    std::vector<std::vector<int>> next;

    int symbol_index(const std::string& name) const {
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (alphabet[i] == name) return static_cast<int>(i);
        }
        return -1;
    }

    bool total() const {
        for (const auto& row : next) {
            for (int target : row) {
                if (target < 0 || target >= static_cast<int>(states.size())) return false;
            }
        }
        return next.size() == states.size();
    }
};

} // namespace exergen

#endif
