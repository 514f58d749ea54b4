#include "legcard/dga.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "legcard/error.hpp"

namespace legcard {

namespace {

using json = nlohmann::json;

}  // namespace

NcPoly NcPoly::word(Word w, long long coeff) {
    NcPoly p;
    p.add_term(w, coeff);
    return p;
}

void NcPoly::add_term(const Word& w, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly operator*(const NcPoly& x, const NcPoly& y) {
    NcPoly out;
    for (const auto& [wx, cx] : x.terms_)
        for (const auto& [wy, cy] : y.terms_) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            out.add_term(w, cx * cy);
        }
    return out;
}

NcPoly NcPoly::scaled(long long c) const {
    NcPoly out;
    for (const auto& [w, k] : terms_) out.add_term(w, k * c);
    return out;
}

int Dga::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (generators[i].name == name) return i;
    return -1;
}

std::vector<int> Dga::height_order() const {
    std::vector<int> order(generators.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return generators[a].height < generators[b].height; });
    return order;
}

int Dga::word_degree(const Word& w) const {
    int deg = 0;
    for (const auto& l : w)
        if (l.is_chord()) deg += generators[l.index].degree;
    return deg;
}

std::string Dga::letter_name(const Letter& l) const {
    switch (l.kind) {
        case Letter::chord:
            return generators[l.index].name;
        case Letter::t:
            return "t" + std::to_string(l.index + 1);
        case Letter::t_inv:
            return "T" + std::to_string(l.index + 1);
    }
    return "?";
}

std::string Dga::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += letter_name(w[i]);
    }
    return out;
}

std::string Dga::poly_to_string(const NcPoly& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        long long mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1) {
            os << mag;
            if (!w.empty()) os << "*";
        }
        if (mag != 1 && w.empty()) continue;
        os << word_to_string(w);
    }
    return os.str();
}

bool Dga::same_algebra(const Dga& o) const {
    return components == o.components && generators == o.generators && differential == o.differential;
}

Dga build_dga(const Front& front, SignConvention signs) {
    const auto& mu = front.maslov();
    const int n = front.crossing_count();
    const int cusps = front.right_cusp_count();

    Dga d;
    d.components = front.component_count();
    for (int c = 0; c < d.components; ++c) d.maslov_shifts.push_back(front.maslov_shift(c));
    for (int i = 0; i < n; ++i) {
        const auto& x = front.crossing(i);
        d.generators.push_back({"a" + std::to_string(i + 1), mu[x.over_strand] - mu[x.under_strand],
                                front.component_of(x.over_strand), front.component_of(x.under_strand),
                                i + 1});
    }
    for (int j = 0; j < cusps; ++j) {
        int comp = front.right_cusp_component(j);
        d.generators.push_back({"c" + std::to_string(j + 1), 1, comp, comp, n + j + 1});
    }
    d.disks.assign(d.generators.size(), {});

    // Each right cusp bounds a small loop; the base-point loop reads t.
    for (int j = 0; j < cusps; ++j) {
        int comp = front.right_cusp_component(j);
        Word w;
        if (front.basepoint_cusp(comp) == j) w.push_back(Letter::t_of(comp));
        d.disks[n + j].push_back({1, w});
    }

    // Sweep disks from each left cusp. State: positions of the upper and
    // lower boundary arcs, plus corners met so far.
    struct Partial {
        int upper;
        int lower;
        int sign;
        std::vector<int> upper_corners;  // crossing indices, increasing x
        std::vector<int> lower_corners;
    };
    auto finish = [&](const Partial& s) {
        Word w;
        for (auto it = s.upper_corners.rbegin(); it != s.upper_corners.rend(); ++it)
            w.push_back(Letter::chord_of(*it));
        for (int c : s.lower_corners) w.push_back(Letter::chord_of(c));
        return Disk{s.sign, w};
    };
    for (int k = 0; k < cusps; ++k) {
        std::vector<Partial> live{{2 * k + 1, 2 * k, 1, {}, {}}};
        for (int i = 0; i < n && !live.empty(); ++i) {
            const int p = front.crossing(i).position;
            const bool even = d.generators[i].degree % 2 == 0;
            std::vector<Partial> next;
            for (auto& s : live) {
                if (s.upper == p + 1 && s.lower == p) {
                    d.disks[i].push_back(finish(s));
                    continue;
                }
                if (s.upper == p) {
                    Partial corner = s;
                    corner.upper_corners.push_back(i);
                    if (even && signs == SignConvention::bottom) corner.sign = -corner.sign;
                    next.push_back(std::move(corner));
                    s.upper = p + 1;
                } else if (s.upper == p + 1) {
                    s.upper = p;
                } else if (s.lower == p) {
                    s.lower = p + 1;
                } else if (s.lower == p + 1) {
                    Partial corner = s;
                    corner.lower_corners.push_back(i);
                    if (even && signs == SignConvention::top) corner.sign = -corner.sign;
                    next.push_back(std::move(corner));
                    s.lower = p;
                }
                next.push_back(std::move(s));
            }
            live = std::move(next);
        }
        for (const auto& s : live)
            if (s.lower % 2 == 0 && s.upper == s.lower + 1) d.disks[n + s.lower / 2].push_back(finish(s));
    }

    d.differential.assign(d.generators.size(), {});
    for (int g = 0; g < d.size(); ++g)
        for (const auto& disk : d.disks[g]) d.differential[g].add_term(disk.word, disk.sign);
    return d;
}

NcPoly differential_of(const Dga& d, const NcPoly& p) {
    NcPoly out;
    for (const auto& [w, coeff] : p.terms()) {
        int prefix_degree = 0;
        for (std::size_t l = 0; l < w.size(); ++l) {
            if (!w[l].is_chord()) continue;
            long long sign = prefix_degree % 2 == 0 ? coeff : -coeff;
            for (const auto& [dw, dc] : d.differential[w[l].index].terms()) {
                Word nw(w.begin(), w.begin() + static_cast<long>(l));
                nw.insert(nw.end(), dw.begin(), dw.end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(l) + 1, w.end());
                out.add_term(nw, sign * dc);
            }
            prefix_degree += d.generators[w[l].index].degree;
        }
    }
    return out;
}

std::vector<std::string> check_dga(const Dga& d) {
    std::vector<std::string> issues;
    if (d.differential.size() != d.generators.size()) {
        issues.push_back("differential size does not match generator count");
        return issues;
    }
    for (int g = 0; g < d.size(); ++g) {
        const auto& gen = d.generators[g];
        const auto& dg = d.differential[g];
        if (gen.r < 0 || gen.r >= d.components || gen.c < 0 || gen.c >= d.components)
            issues.push_back(gen.name + ": component label out of range");
        for (const auto& [w, c] : dg.terms()) {
            (void)c;
            const std::string wname = d.word_to_string(w);
            if (d.word_degree(w) != gen.degree - 1)
                issues.push_back("degree: " + gen.name + " -> " + wname + " has degree " +
                                 std::to_string(d.word_degree(w)) + ", expected " +
                                 std::to_string(gen.degree - 1));
            bool below = true;
            for (const auto& l : w)
                if (l.is_chord() && d.generators[l.index].height >= gen.height) below = false;
            if (!below) issues.push_back("height: " + gen.name + " -> " + wname);
            int current = gen.r;
            bool chained = true;
            for (const auto& l : w) {
                if (l.is_chord()) {
                    if (d.generators[l.index].r != current) chained = false;
                    current = d.generators[l.index].c;
                } else if (l.index != current) {
                    chained = false;
                }
            }
            if (current != gen.c) chained = false;
            if (!chained) issues.push_back("link grading: " + gen.name + " -> " + wname);
        }
        NcPoly dd = differential_of(d, dg);
        if (!dd.is_zero()) issues.push_back("d^2 " + gen.name + " = " + d.poly_to_string(dd));
        if (!d.disks.empty()) {
            NcPoly sum;
            for (const auto& disk : d.disks[g]) sum.add_term(disk.word, disk.sign);
            if (!(sum == dg)) issues.push_back("disk count: " + gen.name + " disks do not sum to d");
        }
    }
    return issues;
}

Dga load_dga(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::parse, std::string("DGA JSON: ") + e.what());
    }
    Dga d;
    static const std::regex t_name("[tT][0-9]+");
    try {
        if (!j.is_object()) fail(ErrorKind::parse, "DGA JSON must be an object");
        d.components = j.at("components").get<int>();
        if (d.components < 1) fail(ErrorKind::validation, "DGA needs at least one component");
        std::set<std::string> names;
        for (const auto& g : j.at("generators")) {
            Generator gen;
            gen.name = g.at("name").get<std::string>();
            gen.degree = g.at("degree").get<int>();
            gen.r = g.at("r").get<int>() - 1;
            gen.c = g.at("c").get<int>() - 1;
            gen.height = g.at("height").get<int>();
            if (gen.name.empty() || std::regex_match(gen.name, t_name))
                fail(ErrorKind::parse, "bad generator name \"" + gen.name + "\"");
            if (!names.insert(gen.name).second)
                fail(ErrorKind::parse, "duplicate generator \"" + gen.name + "\"");
            d.generators.push_back(gen);
        }
        d.differential.assign(d.generators.size(), {});
        const auto& diff = j.at("differential");
        if (!diff.is_object()) fail(ErrorKind::parse, "\"differential\" must be an object");
        for (auto it = diff.begin(); it != diff.end(); ++it) {
            int g = d.find(it.key());
            if (g < 0) fail(ErrorKind::parse, "differential of unknown generator \"" + it.key() + "\"");
            for (const auto& term : it.value()) {
                if (!term.is_array() || term.size() != 2)
                    fail(ErrorKind::parse, "differential terms are [coeff, [letters]]");
                long long coeff = term[0].get<long long>();
                Word w;
                for (const auto& letter : term[1]) {
                    std::string s = letter.get<std::string>();
                    if (std::regex_match(s, t_name)) {
                        int comp = std::stoi(s.substr(1)) - 1;
                        if (comp < 0 || comp >= d.components)
                            fail(ErrorKind::parse, "letter \"" + s + "\" names no component");
                        w.push_back(Letter::t_of(comp, s[0] == 'T'));
                    } else {
                        int idx = d.find(s);
                        if (idx < 0) fail(ErrorKind::parse, "unknown letter \"" + s + "\"");
                        w.push_back(Letter::chord_of(idx));
                    }
                }
                d.differential[g].add_term(w, coeff);
            }
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::parse, std::string("DGA JSON: ") + e.what());
    }
    d.maslov_shifts.assign(d.components, 0);
    auto issues = check_dga(d);
    if (!issues.empty()) {
        std::string msg = "DGA fails validation:";
        for (const auto& s : issues) msg += "\n  " + s;
        fail(ErrorKind::validation, msg);
    }
    return d;
}

std::string save_dga(const Dga& d) {
    json j = json::object();
    j["components"] = d.components;
    json gens = json::array();
    for (const auto& g : d.generators)
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"r", g.r + 1}, {"c", g.c + 1},
                        {"height", g.height}});
    j["generators"] = gens;
    json diff = json::object();
    for (int g = 0; g < d.size(); ++g) {
        json terms = json::array();
        for (const auto& [w, c] : d.differential[g].terms()) {
            json letters = json::array();
            for (const auto& l : w) letters.push_back(d.letter_name(l));
            terms.push_back(json::array({c, letters}));
        }
        diff[d.generators[g].name] = terms;
    }
    j["differential"] = diff;
    return j.dump(2);
}

}  // namespace legcard
