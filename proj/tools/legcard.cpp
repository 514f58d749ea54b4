#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "legcard/aug.hpp"
#include "legcard/augcat.hpp"
#include "legcard/dga.hpp"
#include "legcard/error.hpp"
#include "legcard/front.hpp"
#include "legcard/ruling.hpp"
#include "legcard/verify.hpp"

using namespace legcard;
using json = nlohmann::json;

namespace {

enum Exit {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_invalid_argument = 3,
    exit_parse = 4,
    exit_validation = 5,
    exit_unknown_example = 6,
    exit_io = 7,
    exit_internal = 8,
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_argument:
            return exit_invalid_argument;
        case ErrorKind::parse:
            return exit_parse;
        case ErrorKind::validation:
            return exit_validation;
        case ErrorKind::unknown_example:
            return exit_unknown_example;
        case ErrorKind::io:
            return exit_io;
        case ErrorKind::internal:
            return exit_internal;
    }
    return exit_internal;
}

struct Options {
    std::string example;
    std::string front_file;
    std::string dga_file;
    bool all = false;
    std::string q_list = "2";
    std::string m_list = "0";
    bool json = false;
    bool list = false;
    std::uint64_t seed = 1;
    int random = 0;
};

struct Input {
    std::string label;
    std::optional<Front> front;
    Dga dga;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Input from_front(PlatFront pf, std::string label) {
    Input in;
    in.label = std::move(label);
    in.front.emplace(std::move(pf));
    in.dga = build_dga(*in.front);
    return in;
}

std::vector<Input> load_inputs(const Options& o, bool allow_many) {
    int sources = !o.example.empty() + !o.front_file.empty() + !o.dga_file.empty() + o.all;
    if (sources == 0 && o.random == 0)
        fail(ErrorKind::invalid_argument, "give one of --example, --front, --dga" +
                                              std::string(allow_many ? ", --all" : ""));
    if (sources > 1) fail(ErrorKind::invalid_argument, "--example, --front, --dga and --all are exclusive");
    if (o.all && !allow_many) fail(ErrorKind::invalid_argument, "--all is not accepted by this command");
    std::vector<Input> inputs;
    if (o.all)
        for (const auto& name : builtin_front_names()) inputs.push_back(from_front(builtin_front(name), name));
    if (!o.example.empty()) {
        auto pf = builtin_front(o.example);
        inputs.push_back(from_front(pf, pf.name));
    }
    if (!o.front_file.empty()) {
        auto pf = parse_front(read_file(o.front_file));
        inputs.push_back(from_front(pf, pf.name.empty() ? o.front_file : pf.name));
    }
    if (!o.dga_file.empty()) {
        Input in;
        in.label = o.dga_file;
        in.dga = load_dga(read_file(o.dga_file));
        inputs.push_back(std::move(in));
    }
    if (o.random > 0) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> cusps(1, 3), crossings(0, 8);
        for (int i = 0; i < o.random; ++i) {
            auto pf = random_graded_front(rng, cusps(rng), crossings(rng));
            std::string label = "random" + std::to_string(i + 1);
            pf.name = label;
            inputs.push_back(from_front(pf, label));
        }
    }
    return inputs;
}

std::vector<long> parse_list(const std::string& text, const char* flag) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorKind::invalid_argument, std::string("bad ") + flag + " entry \"" + item + "\"");
        }
    }
    if (out.empty()) fail(ErrorKind::invalid_argument, std::string(flag) + " list is empty");
    return out;
}

std::vector<long> q_values(const Options& o) {
    auto qs = parse_list(o.q_list, "--q");
    for (long q : qs) FiniteField::of_order(static_cast<int>(q));  // validates prime power and bound
    return qs;
}

std::vector<int> m_values(const Options& o) {
    std::vector<int> ms;
    for (long m : parse_list(o.m_list, "--m")) {
        if (m < 0 || m > 64) fail(ErrorKind::invalid_argument, "--m entries must lie in 0..64");
        ms.push_back(static_cast<int>(m));
    }
    return ms;
}

const Front& need_front(const Input& in) {
    if (!in.front) fail(ErrorKind::invalid_argument, "this command needs a front, not a DGA file");
    return *in.front;
}

json augmentation_json(const Dga& d, const FiniteField& f, const Augmentation& e) {
    json j;
    json t = json::array();
    for (auto v : e.t_values) t.push_back(f.to_string(v));
    j["t"] = t;
    json c = json::object();
    for (int g = 0; g < d.size(); ++g) c[d.generators[g].name] = f.to_string(e.chord_values[g]);
    j["chords"] = c;
    return j;
}

int cmd_dga(const Options& o) {
    auto inputs = load_inputs(o, false);
    const auto& in = inputs.front();
    const Dga& d = in.dga;
    if (o.json) {
        std::cout << save_dga(d) << "\n";
        return exit_ok;
    }
    std::cout << "name: " << in.label << "\n";
    std::cout << "components: " << d.components << "\n";
    std::cout << "tb: " << dga_tb(d) << "\n";
    if (!d.maslov_shifts.empty()) {
        std::cout << "maslov_shift:";
        for (int s : d.maslov_shifts) std::cout << " " << s;
        std::cout << "\n";
    }
    std::cout << "generators:\n";
    for (int g : d.height_order()) {
        const auto& gen = d.generators[g];
        std::cout << "  " << gen.name << " degree " << gen.degree << " r " << gen.r + 1 << " c " << gen.c + 1
                  << " height " << gen.height << "\n";
    }
    std::cout << "differential:\n";
    for (int g : d.height_order())
        std::cout << "  d(" << d.generators[g].name << ") = " << d.poly_to_string(d.differential[g]) << "\n";
    auto issues = check_dga(d);
    std::cout << "check: " << (issues.empty() ? "pass" : "FAIL") << "\n";
    for (const auto& s : issues) std::cout << "  " << s << "\n";
    return issues.empty() ? exit_ok : exit_check_failed;
}

int cmd_augs(const Options& o) {
    auto inputs = load_inputs(o, false);
    const Dga& d = inputs.front().dga;
    auto qs = q_values(o);
    auto ms = m_values(o);
    json runs = json::array();
    for (long q : qs)
        for (int m : ms) {
            auto field = FiniteField::of_order(static_cast<int>(q));
            auto augs = enumerate_augmentations(d, *field, m);
            auto ed = euler_data(d, m);
            auto norm = normalized_count(d, q, m, static_cast<long long>(augs.size()));
            if (o.json) {
                json j;
                j["q"] = q;
                j["m"] = m;
                j["count"] = augs.size();
                j["chi_star"] = ed.chi;
                j["normalized"] = norm.to_string();
                if (o.list) {
                    json list = json::array();
                    for (const auto& e : augs) list.push_back(augmentation_json(d, *field, e));
                    j["augmentations"] = list;
                }
                runs.push_back(j);
                continue;
            }
            std::cout << "q = " << q << ", m = " << m << "\n";
            std::cout << "count = " << augs.size() << "\n";
            std::cout << "chi_* = " << ed.chi << "\n";
            std::cout << "normalized = " << norm.to_string() << "\n";
            if (o.list)
                for (std::size_t i = 0; i < augs.size(); ++i)
                    std::cout << "  #" << i + 1 << " " << augmentation_to_string(d, *field, augs[i]) << "\n";
        }
    if (o.json) std::cout << json{{"input", inputs.front().label}, {"runs", runs}}.dump(2) << "\n";
    return exit_ok;
}

std::string switch_set(const NormalRuling& r) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < r.switches.size(); ++i)
        if (r.switches[i]) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

int cmd_rulings(const Options& o) {
    auto inputs = load_inputs(o, false);
    const Front& f = need_front(inputs.front());
    json runs = json::array();
    for (int m : m_values(o)) {
        auto rulings = enumerate_rulings(f, m);
        auto poly = ruling_polynomial(rulings);
        if (o.json) {
            json j;
            j["m"] = m;
            j["polynomial"] = poly.to_string();
            j["count"] = rulings.size();
            if (o.list) {
                json list = json::array();
                for (const auto& r : rulings) {
                    auto cc = classify_crossings(f, r, m);
                    json sw = json::array();
                    for (std::size_t i = 0; i < r.switches.size(); ++i)
                        if (r.switches[i]) sw.push_back(i + 1);
                    int dep = 0, sws = 0;
                    for (auto [k, v] : cc.departures) dep += v, (void)k;
                    for (auto [k, v] : cc.switches) sws += v, (void)k;
                    list.push_back({{"switches", sw},
                                    {"chi", r.chi},
                                    {"departures", dep},
                                    {"returns", cc.total_returns},
                                    {"switch_count", sws}});
                }
                j["rulings"] = list;
            }
            runs.push_back(j);
            continue;
        }
        std::cout << "m = " << m << "\n";
        std::cout << "R(z) = " << poly.to_string() << "\n";
        if (o.list)
            for (const auto& r : rulings) {
                auto cc = classify_crossings(f, r, m);
                int dep = 0;
                for (auto [k, v] : cc.departures) dep += v, (void)k;
                std::cout << "  switches " << switch_set(r) << " chi " << r.chi << " D " << dep << " R "
                          << cc.total_returns << " S " << r.switch_count << "\n";
            }
    }
    if (o.json) std::cout << json{{"input", inputs.front().label}, {"runs", runs}}.dump(2) << "\n";
    return exit_ok;
}

json dims_json(const CohomologyDims& dims) {
    json j = json::object();
    for (auto [deg, dim] : dims.cohomology)
        if (dim) j[std::to_string(deg)] = dim;
    return j;
}

std::string dims_text(const CohomologyDims& dims) {
    std::string s;
    for (auto [deg, dim] : dims.cohomology)
        if (dim) s += (s.empty() ? "" : " ") + std::string("H^") + std::to_string(deg) + "=" + std::to_string(dim);
    return s.empty() ? "0" : s;
}

int cmd_cardinality(const Options& o) {
    auto inputs = load_inputs(o, true);
    auto qs = q_values(o);
    auto ms = m_values(o);
    json out = json::array();
    for (const auto& in : inputs)
        for (long q : qs)
            for (int m : ms) {
                auto r = cardinality_report(in.dga, q, m);
                if (o.json) {
                    json j;
                    j["input"] = in.label;
                    j["q"] = q;
                    j["m"] = m;
                    j["components"] = r.components;
                    j["tb"] = r.tb;
                    j["chi_star"] = r.chi_star;
                    j["augmentations"] = r.augmentations;
                    json cls = json::array();
                    for (const auto& c : r.classes)
                        cls.push_back({{"representative", c.representative + 1},
                                       {"size", c.size},
                                       {"aut", c.aut.get_str()},
                                       {"cohomology", dims_json(c.dims)},
                                       {"size_matches_formula", c.size_matches_formula}});
                    j["classes"] = cls;
                    j["groupoid_cardinality"] = rational_to_string(r.groupoid);
                    if (m == 0) j["homotopy_cardinality"] = r.homotopy.to_string();
                    else {
                        j["hom_boundary_form"] = r.hom_boundary_form.to_string();
                        j["cohomology_form"] = r.cohomology_form.to_string();
                        if (m == 1) j["even_form"] = r.even_form.to_string();
                    }
                    j["normalized_by_tb"] = r.normalized_by_tb.to_string();
                    out.push_back(j);
                    continue;
                }
                std::cout << in.label << ", q = " << q << ", m = " << m << "\n";
                std::cout << "augmentations = " << r.augmentations << "\n";
                std::cout << "classes = " << r.classes.size() << "\n";
                std::cout << "tb = " << r.tb << ", chi_* = " << r.chi_star << ", components = " << r.components
                          << "\n";
                for (std::size_t i = 0; i < r.classes.size(); ++i) {
                    const auto& c = r.classes[i];
                    std::cout << "  class " << i + 1 << ": representative #" << c.representative + 1 << " size "
                              << c.size << " |Aut| " << c.aut.get_str() << " " << dims_text(c.dims)
                              << (c.size_matches_formula ? "" : " SIZE MISMATCH") << "\n";
                }
                std::cout << "groupoid cardinality = " << rational_to_string(r.groupoid) << "\n";
                if (m == 0) {
                    std::cout << "homotopy cardinality = " << r.homotopy.to_string() << "\n";
                } else {
                    std::cout << "hom/boundary form = " << r.hom_boundary_form.to_string() << "\n";
                    std::cout << "cohomology form = " << r.cohomology_form.to_string() << " (uses m1(x+))\n";
                    if (m == 1) std::cout << "even form = " << r.even_form.to_string() << " (uses m1(x+))\n";
                }
                std::cout << "count side = " << r.normalized_by_tb.to_string() << "\n";
            }
    if (o.json) std::cout << out.dump(2) << "\n";
    return exit_ok;
}

int cmd_verify(const Options& o) {
    auto inputs = load_inputs(o, true);
    auto qs = q_values(o);
    auto ms = m_values(o);
    int passed = 0, failed = 0, skipped = 0;
    json out = json::array();
    for (const auto& in : inputs)
        for (long q : qs)
            for (int m : ms) {
                auto results = verify_identities(in.dga, in.front ? &*in.front : nullptr, q, m);
                json rows = json::array();
                if (!o.json) std::cout << in.label << " q=" << q << " m=" << m << "\n";
                for (const auto& r : results) {
                    if (r.skipped) ++skipped;
                    else if (r.pass) ++passed;
                    else ++failed;
                    if (o.json) {
                        rows.push_back({{"identity", r.name},
                                        {"lhs", r.lhs},
                                        {"rhs", r.rhs},
                                        {"pass", r.pass},
                                        {"skipped", r.skipped},
                                        {"note", r.note}});
                        continue;
                    }
                    std::cout << "  " << r.name << ": ";
                    if (r.skipped) {
                        std::cout << "skipped (" << r.note << ")\n";
                        continue;
                    }
                    std::cout << "LHS " << r.lhs << " RHS " << r.rhs << " " << (r.pass ? "pass" : "FAIL");
                    if (!r.note.empty()) std::cout << " [" << r.note << "]";
                    std::cout << "\n";
                }
                if (o.json) out.push_back({{"input", in.label}, {"q", q}, {"m", m}, {"identities", rows}});
            }
    if (o.json)
        std::cout << json{{"runs", out}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}.dump(2)
                  << "\n";
    else
        std::cout << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? exit_ok : exit_check_failed;
}

int cmd_conjecture(const Options& o) {
    auto inputs = load_inputs(o, true);
    auto qs = q_values(o);
    auto ms = m_values(o);
    int z_fail = 0;
    json out = json::array();
    for (const auto& in : inputs)
        for (long q : qs)
            for (int m : ms) {
                auto rows = conjecture_harness(in.dga, q, m);
                int zp = 0, zt = 0, sp = 0, st = 0;
                json jr = json::array();
                for (const auto& r : rows) {
                    (r.z_graded ? zt : st)++;
                    if (r.pass()) (r.z_graded ? zp : sp)++;
                    if (o.json)
                        jr.push_back({{"augmentation", r.index + 1},
                                      {"z_graded", r.z_graded},
                                      {"lhs", r.lhs},
                                      {"rhs", r.rhs},
                                      {"pass", r.pass()}});
                }
                z_fail += zt - zp;
                if (o.json) {
                    out.push_back({{"input", in.label}, {"q", q}, {"m", m}, {"rows", jr}});
                    continue;
                }
                std::cout << in.label << " q=" << q << " m=" << m << ": Z-graded " << zp << "/" << zt
                          << " pass, other " << sp << "/" << st << " pass\n";
                if (o.list)
                    for (const auto& r : rows)
                        std::cout << "  #" << r.index + 1 << (r.z_graded ? " Z-graded" : " 2m-graded") << " lhs "
                                  << r.lhs << " rhs " << r.rhs << " " << (r.pass() ? "pass" : "FAIL") << "\n";
                    else
                        for (const auto& r : rows)
                            if (!r.pass())
                                std::cout << "  finding: #" << r.index + 1 << " lhs " << r.lhs << " rhs " << r.rhs
                                          << "\n";
            }
    if (o.json) std::cout << out.dump(2) << "\n";
    // Failures off the Z-graded locus are findings; Z-graded ones are bugs.
    return z_fail == 0 ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian link invariants: DGAs, augmentations, rulings and cardinalities"};
    app.require_subcommand(0, 1);
    app.set_version_flag("--version", "legcard 1.0");
    Options o;
    bool list_examples = false;
    app.add_flag("--examples", list_examples, "List the built-in fronts and exit");

    auto add_input = [&](CLI::App* sub, bool many) {
        sub->add_option("--example", o.example, "Built-in front name");
        sub->add_option("--front", o.front_file, "Front JSON file");
        sub->add_option("--dga", o.dga_file, "DGA JSON file");
        if (many) sub->add_flag("--all", o.all, "All built-in fronts");
        sub->add_flag("--json", o.json, "JSON output");
    };
    auto add_qm = [&](CLI::App* sub, bool with_q) {
        if (with_q) sub->add_option("--q", o.q_list, "Comma-separated field orders")->capture_default_str();
        sub->add_option("--m", o.m_list, "Comma-separated grading parameters")->capture_default_str();
    };

    auto* dga = app.add_subcommand("dga", "Print the DGA of a front");
    add_input(dga, false);
    auto* augs = app.add_subcommand("augs", "Count augmentations");
    add_input(augs, false);
    add_qm(augs, true);
    augs->add_flag("--list", o.list, "List every augmentation");
    auto* rulings = app.add_subcommand("rulings", "Normal rulings and the ruling polynomial");
    add_input(rulings, false);
    add_qm(rulings, false);
    rulings->add_flag("--list", o.list, "List every ruling");
    auto* card = app.add_subcommand("cardinality", "Isomorphism classes, automorphisms, cardinalities");
    add_input(card, true);
    add_qm(card, true);
    auto* verify = app.add_subcommand("verify", "Check every counting identity");
    add_input(verify, true);
    add_qm(verify, true);
    verify->add_option("--random", o.random, "Also check this many random graded fronts");
    verify->add_option("--seed", o.seed, "Seed for --random")->capture_default_str();
    auto* conj = app.add_subcommand("conjecture", "Dimension identity harness");
    add_input(conj, true);
    add_qm(conj, true);
    conj->add_flag("--list", o.list, "One line per augmentation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (list_examples) {
        for (const auto& name : builtin_front_names()) std::cout << name << "\n";
        return exit_ok;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return exit_usage;
    }
    try {
        if (*dga) return cmd_dga(o);
        if (*augs) return cmd_augs(o);
        if (*rulings) return cmd_rulings(o);
        if (*card) return cmd_cardinality(o);
        if (*verify) return cmd_verify(o);
        if (*conj) return cmd_conjecture(o);
    } catch (const Error& e) {
        std::cerr << "legcard: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "legcard: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
