#include "reflectcg/variables.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace rcg {

namespace {

struct Registry {
    std::vector<std::string> names;
    std::unordered_map<std::string, VarId> ids;
    std::mutex mu;

    Registry() {
        static const char* preset[] = {
            "z", "z1", "z2", "q",
            // family I / variety parameters
            "B1", "B2", "D1", "D2", "E1", "E2", "E3",
            // family II parameters
            "b", "F1", "F2", "G1", "G2", "G3",
            // V_I / V_II coordinates
            "a0", "a1", "a2", "a3", "a4",
            "ab0", "ab1", "ab2", "ab3", "ab4",
            "b0", "b1", "b2", "b3", "b4", "b5",
            // boundary ansatz constants
            "al0", "al1", "al2", "al3", "al4", "al5", "al6", "al7",
            "alb0", "alb1", "alb2", "alb3", "alb4",
        };
        for (const char* n : preset) {
            ids.emplace(n, static_cast<VarId>(names.size()));
            names.emplace_back(n);
        }
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

VarId var_id(std::string_view name) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.ids.find(std::string(name));
    if (it != r.ids.end()) return it->second;
    VarId id = static_cast<VarId>(r.names.size());
    r.names.emplace_back(name);
    r.ids.emplace(r.names.back(), id);
    return id;
}

const std::string& var_name(VarId id) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    if (id >= r.names.size()) throw std::out_of_range("unknown variable id");
    return r.names[id];
}

namespace vars {
VarId z() { static VarId v = var_id("z"); return v; }
VarId z1() { static VarId v = var_id("z1"); return v; }
VarId z2() { static VarId v = var_id("z2"); return v; }
VarId q() { static VarId v = var_id("q"); return v; }
}  // namespace vars

}  // namespace rcg
