#include "legcard/front.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

#include "legcard/error.hpp"

namespace legcard {

namespace {

using json = nlohmann::json;

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

Front::Front(PlatFront diagram) : diagram_(std::move(diagram)) {
    const int n = diagram_.left_cusps;
    if (n < 1) fail(ErrorKind::validation, "front needs at least one left cusp");
    const int strands = 2 * n;

    std::vector<int> cur(strands);
    std::iota(cur.begin(), cur.end(), 0);
    slices_.push_back(cur);
    for (std::size_t i = 0; i < diagram_.crossings.size(); ++i) {
        int pos = diagram_.crossings[i];
        if (pos < 1 || pos > strands - 1)
            fail(ErrorKind::validation, "crossing " + std::to_string(i + 1) + " at position " +
                                            std::to_string(pos) + " is out of range 1.." +
                                            std::to_string(strands - 1));
        int p = pos - 1;
        crossings_.push_back({p, cur[p + 1], cur[p]});
        std::swap(cur[p], cur[p + 1]);
        slices_.push_back(cur);
    }

    // Components: strands 2k,2k+1 share a left cusp; final positions 2j,2j+1 share a right cusp.
    std::vector<int> parent(strands);
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };
    for (int k = 0; k < n; ++k) {
        unite(2 * k, 2 * k + 1);
        unite(cur[2 * k], cur[2 * k + 1]);
    }
    std::vector<int> root_label(strands, -1);
    strand_component_.assign(strands, -1);
    for (int s = 0; s < strands; ++s) {
        int r = find_root(parent, s);
        if (root_label[r] < 0) root_label[r] = components_++;
        strand_component_[s] = root_label[r];
    }

    for (auto [comp, shift] : diagram_.maslov_shift) {
        (void)shift;
        if (comp < 1 || comp > components_)
            fail(ErrorKind::validation, "maslov_shift names unknown component " + std::to_string(comp));
    }

    basepoint_.assign(components_, -1);
    for (int j = 0; j < n; ++j) {
        int c = right_cusp_component(j);
        if (basepoint_[c] < 0) basepoint_[c] = j;
    }
    for (auto [comp, cusp] : diagram_.basepoint_cusp) {
        if (comp < 1 || comp > components_)
            fail(ErrorKind::validation, "basepoint_cusp names unknown component " + std::to_string(comp));
        if (cusp < 1 || cusp > n || right_cusp_component(cusp - 1) != comp - 1)
            fail(ErrorKind::validation, "basepoint cusp " + std::to_string(cusp) +
                                            " does not lie on component " + std::to_string(comp));
        basepoint_[comp - 1] = cusp - 1;
    }

    // Walk each component from its base cusp: leftward along the lower strand,
    // around the left cusp, rightward, around the next right cusp, ...
    // Potential steps by +1 going up through a cusp and -1 going down.
    std::vector<int> final_pos(strands);
    for (int p = 0; p < strands; ++p) final_pos[cur[p]] = p;
    rotation_.assign(components_, 0);
    orientation_.assign(strands, 0);
    std::vector<int> mu(strands, 0);
    bool consistent = true;
    for (int c = 0; c < components_; ++c) {
        int shift = maslov_shift(c);
        int start = right_cusp_lower(basepoint_[c]);
        int s = start;
        int level = shift;
        int up = 0, down = 0;
        do {
            mu[s] = level;
            orientation_[s] = -1;
            // left cusp: s is at position s; partner is s ^ 1
            int t = s ^ 1;
            if (t > s) {
                ++up;
                ++level;
            } else {
                ++down;
                --level;
            }
            mu[t] = level;
            orientation_[t] = +1;
            int ft = final_pos[t];
            int next = cur[ft ^ 1];
            if ((ft ^ 1) > ft) {
                ++up;
                ++level;
            } else {
                ++down;
                --level;
            }
            s = next;
        } while (s != start);
        if (level != shift) consistent = false;
        rotation_[c] = (down - up) / 2;
        if (shift % 2 != 0)
            for (int x = 0; x < strands; ++x)
                if (strand_component_[x] == c) orientation_[x] = -orientation_[x];
    }
    if (consistent) {
        maslov_ = mu;
    } else {
        maslov_error_ = "nonzero rotation number on some component; no Z-valued Maslov potential";
    }
}

int Front::maslov_shift(int component) const {
    auto it = diagram_.maslov_shift.find(component + 1);
    return it == diagram_.maslov_shift.end() ? 0 : it->second;
}

bool Front::graded() const { return maslov_.has_value(); }

const std::vector<int>& Front::maslov() const {
    if (!maslov_) fail(ErrorKind::validation, maslov_error_);
    return *maslov_;
}

int Front::crossing_degree(int i) const {
    const auto& mu = maslov();
    return mu[crossings_[i].over_strand] - mu[crossings_[i].under_strand];
}

int Front::writhe() const {
    int w = 0;
    for (const auto& x : crossings_)
        w += orientation_[x.over_strand] == orientation_[x.under_strand] ? 1 : -1;
    return w;
}

ClassicalInvariants Front::classical_invariants() const {
    return {writhe() - right_cusp_count(), rotation_, components_};
}

PlatFront parse_front(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::parse, std::string("front JSON: ") + e.what());
    }
    PlatFront f;
    try {
        if (!j.is_object()) fail(ErrorKind::parse, "front JSON must be an object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& key = it.key();
            if (key != "name" && key != "left_cusps" && key != "events" && key != "maslov_shift" &&
                key != "basepoint_cusp")
                fail(ErrorKind::parse, "unknown front field \"" + key + "\"");
        }
        f.name = j.value("name", std::string());
        if (!j.contains("left_cusps") || !j.at("left_cusps").is_number_integer())
            fail(ErrorKind::parse, "front needs integer \"left_cusps\"");
        f.left_cusps = j.at("left_cusps").get<int>();
        if (!j.contains("events") || !j.at("events").is_array())
            fail(ErrorKind::parse, "front needs array \"events\"");
        for (const auto& e : j.at("events")) {
            if (!e.is_number_integer()) fail(ErrorKind::parse, "events must be integers");
            f.crossings.push_back(e.get<int>());
        }
        auto read_map = [&](const char* field, std::map<int, int>& out) {
            if (!j.contains(field)) return;
            const auto& m = j.at(field);
            if (!m.is_object()) fail(ErrorKind::parse, std::string("\"") + field + "\" must be an object");
            for (auto it = m.begin(); it != m.end(); ++it) {
                int comp = 0;
                try {
                    std::size_t used = 0;
                    comp = std::stoi(it.key(), &used);
                    if (used != it.key().size()) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    fail(ErrorKind::parse, std::string("bad component key in \"") + field + "\"");
                }
                if (!it.value().is_number_integer())
                    fail(ErrorKind::parse, std::string("\"") + field + "\" values must be integers");
                out[comp] = it.value().get<int>();
            }
        };
        read_map("maslov_shift", f.maslov_shift);
        read_map("basepoint_cusp", f.basepoint_cusp);
    } catch (const json::exception& e) {
        fail(ErrorKind::parse, std::string("front JSON: ") + e.what());
    }
    Front traced(f);
    if (!traced.graded()) {
        std::string rot;
        for (int c = 0; c < traced.component_count(); ++c)
            rot += (c ? "," : "") + std::to_string(traced.rotation()[c]);
        fail(ErrorKind::validation, "front \"" + f.name + "\" has nonzero rotation (" + rot + ")");
    }
    return f;
}

std::string serialize_front(const PlatFront& front) {
    json j = json::object();
    j["name"] = front.name;
    j["left_cusps"] = front.left_cusps;
    j["events"] = front.crossings;
    auto write_map = [&](const char* field, const std::map<int, int>& m) {
        if (m.empty()) return;
        json o = json::object();
        for (auto [k, v] : m) o[std::to_string(k)] = v;
        j[field] = o;
    };
    write_map("maslov_shift", front.maslov_shift);
    write_map("basepoint_cusp", front.basepoint_cusp);
    return j.dump();
}

}  // namespace legcard
