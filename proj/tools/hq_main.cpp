// hq — exact computations in the Hopf algebra k_q[x, x^-1, y] and its
// coalgebra automorphism group. One command per invocation; JSON in, JSON or
// human text out; `verify` runs the named exact-identity suites and exits
// nonzero on any failure.

#include "hq/hopf.hpp"
#include "hq/json_io.hpp"
#include "hq/parser.hpp"
#include "hq/primitives.hpp"
#include "hq/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

using hq::json;

hq::Window parse_window_flag(const std::string& s) {
    int a, b, c;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
        throw std::invalid_argument("--window expects nlo,nhi,mmax");
    hq::Window w{a, b, c};
    w.validate();
    return w;
}

json load_json(const std::string& text) { return json::parse(text); }

struct Settings {
    hq::FieldConfig field = hq::symbolic_field();
    hq::Window window{-4, 4, 6};
    int depth = 3;
    std::uint64_t seed = 12345;
};

Settings load_settings(const std::string& config_path, const std::string& mode,
                       const std::string& qstr, const std::string& window_flag,
                       std::int64_t seed_flag, int depth_flag) {
    Settings s;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config file: " + config_path);
        json j = json::parse(in);
        if (j.contains("field")) s.field = j.at("field").get<hq::FieldConfig>();
        if (j.contains("window")) s.window = j.at("window").get<hq::Window>();
        if (j.contains("depth")) s.depth = j.at("depth").get<int>();
        if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    }
    if (!mode.empty()) {
        if (mode == "symbolic")
            s.field = hq::symbolic_field();
        else if (mode == "numeric")
            s.field = hq::numeric_field(qstr.empty() ? hq::BigRat(2) : hq::BigRat(qstr));
        else
            throw std::invalid_argument("--mode must be symbolic or numeric");
    } else if (!qstr.empty()) {
        s.field = hq::numeric_field(hq::BigRat(qstr));
    }
    if (!window_flag.empty()) s.window = parse_window_flag(window_flag);
    if (seed_flag >= 0) s.seed = static_cast<std::uint64_t>(seed_flag);
    if (depth_flag > 0) s.depth = depth_flag;
    return s;
}

void print_element(const hq::Element& e, bool as_json) {
    if (as_json)
        std::cout << json(e).dump() << "\n";
    else
        std::cout << hq::render_element(e) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in the Hopf algebra k_q[x,x^-1,y] and its coalgebra automorphisms"};
    app.require_subcommand(1);

    std::string config_path, mode, qstr, window_flag;
    std::int64_t seed_flag = -1;
    int depth_flag = 0;
    bool as_json = false;
    app.add_option("--config", config_path, "JSON config file (field, window, depth, seed)");
    app.add_option("--mode", mode, "field mode: symbolic | numeric");
    app.add_option("--q", qstr, "numeric-mode q value as p/r");
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::function<int(const Settings&)> action;

    // ---- element commands
    std::string expr_a, expr_b;
    auto* eval = app.add_subcommand("eval", "parse and normalize an expression");
    eval->add_option("expr", expr_a, "expression")->required();
    eval->callback([&] {
        action = [&](const Settings&) {
            print_element(hq::parse_element(expr_a), as_json);
            return 0;
        };
    });

    auto* mul = app.add_subcommand("mul", "product of two elements in H");
    mul->add_option("left", expr_a)->required();
    mul->add_option("right", expr_b)->required();
    mul->callback([&] {
        action = [&](const Settings&) {
            print_element(hq::multiply(hq::parse_element(expr_a), hq::parse_element(expr_b)),
                          as_json);
            return 0;
        };
    });

    auto* delta = app.add_subcommand("delta", "comultiplication of an element");
    delta->add_option("expr", expr_a)->required();
    delta->callback([&] {
        action = [&](const Settings&) {
            hq::TensorElement t = hq::comultiply(hq::parse_element(expr_a));
            if (as_json)
                std::cout << json(t).dump() << "\n";
            else
                std::cout << hq::render_tensor(t) << "\n";
            return 0;
        };
    });

    auto* counit = app.add_subcommand("counit", "counit of an element");
    counit->add_option("expr", expr_a)->required();
    counit->callback([&] {
        action = [&](const Settings&) {
            hq::Scalar s = hq::counit(hq::parse_element(expr_a));
            if (as_json)
                std::cout << json(s).dump() << "\n";
            else
                std::cout << s.str() << "\n";
            return 0;
        };
    });

    auto* antipode = app.add_subcommand("antipode", "antipode of an element");
    antipode->add_option("expr", expr_a)->required();
    antipode->callback([&] {
        action = [&](const Settings&) {
            print_element(hq::antipode(hq::parse_element(expr_a)), as_json);
            return 0;
        };
    });

    // ---- primitives
    int prim_m = 1;
    auto* prim = app.add_subcommand("primitives", "basis of the (x^m,1)-primitive space");
    prim->add_option("--m", prim_m, "grouplike exponent m")->required();
    prim->add_option("--window", window_flag, "nlo,nhi,mmax");
    prim->callback([&] {
        action = [&](const Settings& s) {
            auto basis = hq::primitive_space(prim_m, s.window);
            if (as_json) {
                json out{{"dimension", basis.size()}, {"basis", basis}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "dimension " << basis.size() << "\n";
                for (const auto& e : basis) std::cout << hq::render_element(e) << "\n";
            }
            return 0;
        };
    });

    // ---- morph
    std::string morph_json, left_json, right_json, table_json;
    auto* morph = app.add_subcommand("morph", "morphism operations");
    morph->require_subcommand(1);

    auto* mapply = morph->add_subcommand("apply", "apply a morphism word to an element");
    mapply->add_option("--morph", morph_json, "morphism JSON")->required();
    mapply->add_option("expr", expr_a)->required();
    mapply->callback([&] {
        action = [&](const Settings&) {
            hq::Morphism f = load_json(morph_json).get<hq::Morphism>();
            print_element(hq::apply(f, hq::parse_element(expr_a)), as_json);
            return 0;
        };
    });

    auto* mcompose = morph->add_subcommand("compose", "concatenate two morphism words");
    mcompose->add_option("--left", left_json, "applied second")->required();
    mcompose->add_option("--right", right_json, "applied first")->required();
    mcompose->callback([&] {
        action = [&](const Settings&) {
            hq::Morphism f = load_json(left_json).get<hq::Morphism>();
            hq::Morphism g = load_json(right_json).get<hq::Morphism>();
            std::cout << json(hq::compose(f, g)).dump() << "\n";
            return 0;
        };
    });

    auto* mtab = morph->add_subcommand("tabulate", "tabulate a morphism on a window");
    mtab->add_option("--morph", morph_json)->required();
    mtab->add_option("--window", window_flag, "nlo,nhi,mmax");
    mtab->callback([&] {
        action = [&](const Settings& s) {
            hq::Morphism f = load_json(morph_json).get<hq::Morphism>();
            std::cout << json(hq::tabulate(f, s.window)).dump() << "\n";
            return 0;
        };
    });

    auto* mcheck = morph->add_subcommand("check", "certify the coalgebra-map identity on a window");
    mcheck->add_option("--morph", morph_json);
    mcheck->add_option("--table", table_json);
    mcheck->add_option("--window", window_flag, "nlo,nhi,mmax");
    mcheck->callback([&] {
        action = [&](const Settings& s) {
            hq::CoalgebraReport rep;
            if (!table_json.empty())
                rep = hq::is_coalgebra_map(load_json(table_json).get<hq::TabulatedMorphism>());
            else if (!morph_json.empty())
                rep = hq::is_coalgebra_map(load_json(morph_json).get<hq::Morphism>(), s.window);
            else
                throw std::invalid_argument("check: need --morph or --table");
            std::cout << json(rep).dump() << "\n";
            return rep.pass ? 0 : 1;
        };
    });

    auto* minv = morph->add_subcommand("invert", "invert a triangular tabulated morphism");
    minv->add_option("--table", table_json, "tabulated morphism JSON");
    minv->add_option("--morph", morph_json, "morphism JSON (tabulated first)");
    minv->add_option("--window", window_flag, "nlo,nhi,mmax");
    minv->callback([&] {
        action = [&](const Settings& s) {
            hq::TabulatedMorphism t;
            if (!table_json.empty())
                t = load_json(table_json).get<hq::TabulatedMorphism>();
            else if (!morph_json.empty())
                t = hq::tabulate(load_json(morph_json).get<hq::Morphism>(), s.window);
            else
                throw std::invalid_argument("invert: need --morph or --table");
            std::cout << json(hq::invert(t)).dump() << "\n";
            return 0;
        };
    });

    auto* mdec = morph->add_subcommand("decompose", "decompose into (tower, alpha, r)");
    mdec->add_option("--table", table_json);
    mdec->add_option("--morph", morph_json);
    mdec->add_option("--window", window_flag, "nlo,nhi,mmax");
    mdec->add_option("--depth", depth_flag, "tower depth");
    mdec->callback([&] {
        action = [&](const Settings& s) {
            hq::TabulatedMorphism t;
            if (!table_json.empty())
                t = load_json(table_json).get<hq::TabulatedMorphism>();
            else if (!morph_json.empty())
                t = hq::tabulate(load_json(morph_json).get<hq::Morphism>(), s.window);
            else
                throw std::invalid_argument("decompose: need --morph or --table");
            std::cout << json(hq::decompose(t, s.depth)).dump() << "\n";
            return 0;
        };
    });

    // ---- group
    bool closed = false;
    std::string elt_json, tower_json;
    auto* group = app.add_subcommand("group", "tower group operations");
    group->require_subcommand(1);

    auto* gmul = group->add_subcommand("mul", "product of two towers");
    gmul->add_option("--depth", depth_flag, "tower depth");
    gmul->add_option("--left", left_json)->required();
    gmul->add_option("--right", right_json)->required();
    gmul->add_flag("--closed", closed, "use the level-2/3 closed forms");
    gmul->callback([&] {
        action = [&](const Settings& s) {
            auto adjust = [&](hq::BetaTower t) {
                if (t.depth() > s.depth) return t.truncated(s.depth);
                return t.padded(s.depth);
            };
            hq::BetaTower b = adjust(load_json(left_json).get<hq::BetaTower>());
            hq::BetaTower c = adjust(load_json(right_json).get<hq::BetaTower>());
            hq::BetaTower d = hq::BetaTower::zero(s.depth);
            if (closed) {
                if (s.depth > 3)
                    throw std::invalid_argument("--closed supports depth <= 3 only");
                d.level(1) = b.level(1) + c.level(1);
                if (s.depth >= 2) d.level(2) = hq::g_mul_closed(2, b, c);
                if (s.depth >= 3) d.level(3) = hq::g_mul_closed(3, b, c);
            } else {
                d = hq::g_mul(b, c);
            }
            std::cout << json(d).dump() << "\n";
            return 0;
        };
    });

    auto* gact = group->add_subcommand("act", "semidirect element acting on a tower");
    gact->add_option("--elt", elt_json, "(alpha, r) JSON")->required();
    gact->add_option("--tower", tower_json)->required();
    gact->callback([&] {
        action = [&](const Settings&) {
            hq::SemidirectElt a = load_json(elt_json).get<hq::SemidirectElt>();
            hq::BetaTower t = load_json(tower_json).get<hq::BetaTower>();
            std::cout << json(hq::act(a, t)).dump() << "\n";
            return 0;
        };
    });

    // ---- verify
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--window", window_flag, "nlo,nhi,mmax");
    verify->add_option("--seed", seed_flag, "RNG seed for randomized cases");
    verify->callback([&] {
        action = [&](const Settings& s) {
            hq::VerifyOptions opts;
            opts.window = s.window;
            opts.seed = s.seed;
            hq::SuiteResult res = hq::run_suite(suite, opts);
            if (as_json) {
                json cases = json::array();
                for (const auto& c : res.cases)
                    cases.push_back(json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
                json out{{"suite", res.name},
                         {"pass", res.pass()},
                         {"failed", res.failed()},
                         {"cases", std::move(cases)}};
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& c : res.cases) {
                    if (c.pass)
                        std::cout << "ok " << c.id << "\n";
                    else
                        std::cout << "FAIL " << c.id
                                  << (c.detail.empty() ? "" : " — " + c.detail) << "\n";
                }
                std::cout << res.name << ": " << (res.cases.size() - res.failed()) << "/"
                          << res.cases.size() << " cases passed\n";
            }
            return res.pass() ? 0 : 1;
        };
    });

    CLI11_PARSE(app, argc, argv);

    try {
        Settings settings =
            load_settings(config_path, mode, qstr, window_flag, seed_flag, depth_flag);
        hq::set_field(settings.field);
        return action(settings);
    } catch (const std::exception& e) {
        if (as_json)
            std::cout << json{{"error", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
