#include "rootsys/classify.hpp"
#include "rootsys/named.hpp"
#include "rootsys/orbit.hpp"
#include "rootsys/reproduce.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <set>

using namespace rootsys;
using Json = nlohmann::ordered_json;

namespace {

struct Output {
    Json payload = Json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string dot;
};

struct Common {
    std::string format = "text";
    int jobs = 1;
    std::string sigma;
    std::string xi;
    std::string roots;
    int cls = 0;
    bool dot = false;
    uint64_t cap = 0;
};

std::string tstr(const RootSystem& sys, const IsoType& t) { return t.empty() ? "0" : t.str(sys.label.series); }
std::string tstr(const RootSystem& sys, const RootSet& x) { return tstr(sys, iso_type(sys, x)); }

Json vec_json(const RootVec& v) {
    Json a = Json::array();
    for (int x : v) {
        if (x % 2 == 0)
            a.push_back(x / 2);
        else
            a.push_back(x / 2.0);
    }
    return a;
}

std::string vec_str(const RootVec& v) { return vec_json(v).dump(); }

Json roots_json(const RootSystem& sys, const std::vector<int>& idx) {
    Json a = Json::array();
    for (int i : idx) a.push_back(vec_json(sys.roots[i]));
    return a;
}

// Subsystem named by --roots (JSON list of vectors in ordinary coordinates),
// a built-in name, or a type (the --class-th hom class image).
Subsystem resolve_xi(const RootSystem& sys, const Common& c) {
    if (!c.roots.empty()) {
        Json j;
        try {
            j = Json::parse(c.roots);
        } catch (const std::exception& e) {
            throw Error(std::string("cannot parse --roots: ") + e.what());
        }
        if (!j.is_array()) throw Error("--roots must be a JSON array of vectors");
        std::vector<RootVec> gens;
        for (auto& r : j) {
            if (!r.is_array() || int(r.size()) != sys.dim)
                throw Error("each root needs " + std::to_string(sys.dim) + " coordinates");
            RootVec v;
            for (auto& x : r) {
                double d = x.get<double>() * 2;
                if (std::abs(d - std::round(d)) > 1e-9) throw Error("coordinates must be multiples of 1/2");
                v.push_back(int(std::lround(d)));
            }
            if (sys.index_of(v) < 0) throw Error("not a root of " + sys.label.str() + ": " + r.dump());
            gens.push_back(v);
        }
        return generate(sys, gens);
    }
    if (c.xi.empty()) throw Error("give --xi or --roots");
    if (is_named(c.xi)) return named_subsystem(sys, c.xi);
    auto classes = hom_classes(sys, IsoType::parse(c.xi));
    if (classes.empty()) throw Error("no imbedding of " + c.xi + " into " + sys.label.str());
    if (c.cls < 0 || c.cls >= int(classes.size()))
        throw Error("--class must be below " + std::to_string(classes.size()));
    return classes[c.cls].image;
}

Output cmd_build(const Common& c, bool extended) {
    auto sys = build_root_system(c.sigma);
    Output o;
    o.payload = Json::parse(to_json(sys));
    o.payload["weyl_order"] = weyl_order(sys).str();
    o.header = {"index", "root", "positive", "simple", "long"};
    for (int i = 0; i < sys.size(); ++i) {
        bool simple = std::find(sys.simple.begin(), sys.simple.end(), i) != sys.simple.end();
        o.rows.push_back({std::to_string(i), vec_str(sys.roots[i]), sys.positive(i) ? "1" : "0", simple ? "1" : "0",
                          sys.is_long(i) ? "1" : "0"});
    }
    if (c.dot) {
        auto d = diagram_of(sys, extended ? sys.extended() : sys.simple);
        if (extended)
            for (int j = 0; j < d.size(); ++j) d.nodes[j].mark = sys.marks[j];
        o.dot = to_dot(d, sys.label.str());
    }
    return o;
}

Output cmd_hom(const Common& c) {
    auto sys = build_root_system(c.sigma);
    auto classes = hom_classes(sys, IsoType::parse(c.xi));
    Output o;
    o.payload["xi"] = c.xi;
    o.payload["sigma"] = sys.label.str();
    o.payload["count"] = classes.size();
    Json arr = Json::array();
    o.header = {"class", "image", "perp", "perpperp", "rep"};
    int k = 0;
    for (auto& h : classes) {
        Json e;
        e["image"] = tstr(sys, h.image.roots);
        e["perp"] = tstr(sys, h.perp_type);
        e["perpperp"] = tstr(sys, h.perp_perp_type);
        e["rep"] = roots_json(sys, h.rep);
        arr.push_back(e);
        o.rows.push_back({std::to_string(k++), e["image"], e["perp"], e["perpperp"], e["rep"].dump()});
    }
    o.payload["classes"] = arr;
    return o;
}

Output cmd_perp(const Common& c) {
    auto sys = build_root_system(c.sigma);
    auto x = resolve_xi(sys, c);
    auto p = perp(sys, x.roots);
    auto pp = perp(sys, p.roots);
    Output o;
    o.payload["sigma"] = sys.label.str();
    o.payload["xi"] = tstr(sys, x.roots);
    o.payload["perp"] = tstr(sys, p.roots);
    o.payload["perp_fundamental"] = roots_json(sys, fundamental_system_of(sys, p.roots));
    o.payload["perpperp"] = tstr(sys, pp.roots);
    o.payload["perp_closed"] = pp.roots == x.roots;
    o.header = {"xi", "perp", "perpperp", "perp_closed"};
    o.rows.push_back({o.payload["xi"], o.payload["perp"], o.payload["perpperp"], pp.roots == x.roots ? "1" : "0"});
    return o;
}

Output cmd_closure(const Common& c) {
    auto sys = build_root_system(c.sigma);
    auto x = resolve_xi(sys, c);
    Output o;
    o.payload["sigma"] = sys.label.str();
    o.payload["xi"] = tstr(sys, x.roots);
    o.header = {"kind", "closed", "closure", "closure_fundamental"};
    using F = Subsystem (*)(const RootSystem&, const RootSet&);
    const std::pair<const char*, F> kinds[] = {{"S", closure_S}, {"L", closure_L}, {"perp", closure_perp}};
    for (auto& [name, f] : kinds) {
        auto y = f(sys, x.roots);
        Json e;
        e["closed"] = y.roots == x.roots;
        e["closure"] = tstr(sys, y.roots);
        e["closure_fundamental"] = roots_json(sys, fundamental_system_of(sys, y.roots));
        o.payload[name] = e;
        o.rows.push_back({name, y.roots == x.roots ? "1" : "0", e["closure"], e["closure_fundamental"].dump()});
    }
    return o;
}

OrbitOptions orbit_options(const Common& c) {
    OrbitOptions opt;
    opt.cap = c.cap;
    opt.progress = [](uint64_t n) { std::cerr << "states " << n << '\n'; };
    return opt;
}

Output cmd_orbit(const Common& c) {
    auto sys = build_root_system(c.sigma);
    auto x = resolve_xi(sys, c);
    auto r = orbit_of(sys, x.roots, orbit_options(c));
    Output o;
    BigInt stab = weyl_order(sys) / r.size;
    o.payload["sigma"] = sys.label.str();
    o.payload["xi"] = tstr(sys, x.roots);
    o.payload["orbit_size"] = r.size;
    o.payload["stabilizer_order"] = stab.str();
    o.payload["representative"] = roots_json(sys, fundamental_system_of(sys, r.representative.roots));
    o.payload["schreier_generators"] = r.schreier;
    o.header = {"xi", "orbit_size", "stabilizer_order"};
    o.rows.push_back({o.payload["xi"], std::to_string(r.size), stab.str()});
    return o;
}

Output cmd_outsigma(const Common& c) {
    auto sys = build_root_system(c.sigma);
    auto x = resolve_xi(sys, c);
    auto r = orbit_of(sys, x.roots, orbit_options(c));
    auto elems = close_group(int(r.base.size()), r.schreier);
    auto t = iso_type(sys, x.roots);
    Output o;
    o.payload["sigma"] = sys.label.str();
    o.payload["xi"] = tstr(sys, t);
    o.payload["order"] = elems.size();
    o.payload["out_xi_order"] = out_order(t).str();
    o.payload["base"] = roots_json(sys, r.base);
    o.payload["generators"] = r.schreier;
    o.header = {"xi", "order", "out_xi_order"};
    o.rows.push_back({o.payload["xi"], std::to_string(elems.size()), out_order(t).str()});
    return o;
}

Output cmd_census(const Common& c, bool exhaustive) {
    auto sys = build_root_system(c.sigma);
    Output o;
    o.payload["sigma"] = sys.label.str();
    Json arr = Json::array();
    if (exhaustive) {
        o.header = {"type", "orbits"};
        for (auto& e : census_small(sys)) {
            arr.push_back({{"type", tstr(sys, e.type)}, {"orbits", e.orbits}});
            o.rows.push_back({tstr(sys, e.type), std::to_string(e.orbits)});
        }
    } else {
        o.header = {"type", "fundamental"};
        for (auto& e : subsystem_classes(sys)) {
            auto f = roots_json(sys, fundamental_system_of(sys, e.rep.roots));
            arr.push_back({{"type", tstr(sys, e.type)}, {"fundamental", f}});
            o.rows.push_back({tstr(sys, e.type), f.dump()});
        }
    }
    o.payload["classes"] = arr;
    return o;
}

const std::vector<std::string> kTableColumns = {"xi", "sigma", "family", "sharp", "sharp_xi", "sharp_xi_prime",
                                                "sharp_sigma", "perp", "perpperp", "P", "L", "S"};

Output cmd_table(const Common& c) {
    auto sys = build_root_system(c.sigma);
    std::vector<IsoType> types;
    if (!c.xi.empty()) {
        types.push_back(IsoType::parse(c.xi));
    } else {
        std::set<IsoType> s;
        for (auto& e : subsystem_classes(sys)) s.insert(e.type);
        types.assign(s.begin(), s.end());
    }
    Output o;
    o.header = kTableColumns;
    Json arr = Json::array();
    for (auto& t : types) {
        for (auto& r : table_row(sys, t).rows) {
            std::vector<std::string> row = {tstr(sys, t),
                                            sys.label.str(),
                                            r.family,
                                            std::to_string(r.sharp),
                                            std::to_string(r.sharp_xi),
                                            std::to_string(r.sharp_xi_prime),
                                            std::to_string(r.sharp_sigma),
                                            r.perp_str(),
                                            r.perp_perp,
                                            r.p_str(),
                                            r.l_str(),
                                            r.s_str()};
            Json e = Json::object();
            for (size_t k = 0; k < row.size(); ++k) e[kTableColumns[k]] = row[k];
            arr.push_back(e);
            o.rows.push_back(row);
        }
    }
    o.payload["rows"] = arr;
    return o;
}

Output cmd_dualpairs(const Common& c) {
    auto sys = build_root_system(c.sigma);
    Output o;
    o.header = {"xi1", "xi2", "special", "out1", "out2", "out_sigma1", "out_sigma2"};
    Json arr = Json::array();
    for (auto& d : dual_pair_census(sys)) {
        std::vector<std::string> row = {tstr(sys, d.xi1.roots), tstr(sys, d.xi2.roots), d.is_special ? "1" : "0",
                                        d.out1_order.str(),      d.out2_order.str(),      d.out_sigma1_order.str(),
                                        d.out_sigma2_order.str()};
        arr.push_back({{"xi1", row[0]},
                       {"xi2", row[1]},
                       {"special", d.is_special},
                       {"out1", row[3]},
                       {"out2", row[4]},
                       {"out_sigma1", row[5]},
                       {"out_sigma2", row[6]}});
        o.rows.push_back(row);
    }
    o.payload["sigma"] = sys.label.str();
    o.payload["pairs"] = arr;
    return o;
}

Output cmd_fundamental(const Common& c) {
    auto sys = build_root_system(c.sigma);
    auto t = IsoType::parse(c.xi);
    auto f = fundamental_subsets(sys, t);
    Output o;
    o.payload["xi"] = tstr(sys, t);
    o.payload["sigma"] = sys.label.str();
    o.payload["count"] = f.count;
    o.payload["recursive_count"] = fundamental_count_recursive(t, sys.label.str());
    o.payload["subsets"] = f.subsets;
    o.header = {"subset"};
    for (auto& s : f.subsets) {
        std::string r;
        for (int x : s) r += (r.empty() ? "" : ",") + std::to_string(x + 1);
        o.rows.push_back({r});
    }
    return o;
}

Output cmd_affine(const Common& c, int rank_bound) {
    Output o;
    o.header = {"label", "aliases", "rank", "marks"};
    Json arr = Json::array();
    for (auto& e : affine_catalog(rank_bound)) {
        std::string aliases, marks;
        for (auto& a : e.aliases) aliases += (aliases.empty() ? "" : ",") + a;
        Json m = Json::array();
        for (auto& n : e.diagram.nodes) {
            marks += (marks.empty() ? "" : ",") + std::to_string(*n.mark);
            m.push_back(*n.mark);
        }
        arr.push_back({{"label", e.label}, {"aliases", e.aliases}, {"rank", e.diagram.size() - 1}, {"marks", m}});
        o.rows.push_back({e.label, aliases, std::to_string(e.diagram.size() - 1), marks});
        if (c.dot) o.dot += to_dot(e.diagram, e.label);
    }
    o.payload["rank_bound"] = rank_bound;
    o.payload["diagrams"] = arr;
    return o;
}

Output cmd_maximal(const Common& c, bool s_closed) {
    auto sys = build_root_system(c.sigma);
    Output o;
    o.header = {"type", "fundamental"};
    Json arr = Json::array();
    for (auto& [t, x] : maximal_subsystems(sys, s_closed)) {
        auto f = roots_json(sys, fundamental_system_of(sys, x.roots));
        arr.push_back({{"type", tstr(sys, t)}, {"fundamental", f}});
        o.rows.push_back({tstr(sys, t), f.dump()});
    }
    o.payload["sigma"] = sys.label.str();
    o.payload["s_closed_only"] = s_closed;
    o.payload["maximal"] = arr;
    return o;
}

Output cmd_stats(const Common& c) {
    auto sys = build_root_system(c.sigma);
    auto s = stats(sys);
    Output o;
    const std::vector<std::pair<std::string, int>> f = {
        {"classes", s.classes},         {"iso_classes", s.iso_classes},   {"s_closed", s.s_closed},
        {"l_closed", s.l_closed},       {"perp_closed", s.perp_closed},   {"perp_dense", s.perp_dense},
        {"perp_dense_iso", s.full_rank}, {"maximal", s.maximal},           {"maximal_s_closed", s.maximal_s_closed},
        {"dual_pairs", s.dual_pairs},   {"special_dual_pairs", s.special_dual_pairs}};
    o.payload["sigma"] = sys.label.str();
    std::vector<std::string> row;
    for (auto& [k, v] : f) {
        o.payload[k] = v;
        o.header.push_back(k);
        row.push_back(std::to_string(v));
    }
    o.rows.push_back(row);
    return o;
}

Output cmd_r(const Common& c) {
    auto sys = build_root_system(c.sigma);
    Output o;
    int r = r_of(sys), m = m_sigma(sys);
    o.payload["sigma"] = sys.label.str();
    o.payload["r"] = r;
    o.payload["m"] = m;
    o.header = {"sigma", "r", "m"};
    o.rows.push_back({sys.label.str(), std::to_string(r), std::to_string(m)});
    return o;
}

void emit(const Output& o, const std::string& format) {
    if (format == "json") {
        std::cout << o.payload.dump(2) << '\n';
    } else if (format == "tsv") {
        auto line = [](const std::vector<std::string>& v) {
            for (size_t k = 0; k < v.size(); ++k) std::cout << (k ? "\t" : "") << v[k];
            std::cout << '\n';
        };
        line(o.header);
        for (auto& r : o.rows) line(r);
    } else {
        std::vector<size_t> w(o.header.size());
        for (size_t k = 0; k < w.size(); ++k) {
            w[k] = o.header[k].size();
            for (auto& r : o.rows) w[k] = std::max(w[k], r[k].size());
        }
        auto line = [&](const std::vector<std::string>& v) {
            std::string s;
            for (size_t k = 0; k < v.size(); ++k) {
                s += v[k];
                if (k + 1 < v.size()) s += std::string(w[k] - v[k].size() + 2, ' ');
            }
            std::cout << s << '\n';
        };
        line(o.header);
        for (auto& r : o.rows) line(r);
    }
    if (!o.dot.empty()) std::cout << o.dot;
}

void error_out(const std::string& format, const std::string& kind, const std::string& msg) {
    if (format == "json")
        std::cout << Json{{"error", {{"kind", kind}, {"message", msg}}}}.dump(2) << '\n';
    else
        std::cerr << "error (" << kind << "): " << msg << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root subsystems: imbeddings, orthogonal complements, closures and census tables"};
    app.require_subcommand(1);
    Common c;
    bool extended = false, exhaustive = false, s_closed = false;
    int rank_bound = 8;
    std::string kind, scope = "all";

    auto common = [&](CLI::App* s, bool sigma, bool xi) {
        s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
        s->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
        if (sigma) s->add_option("--sigma", c.sigma, "Host label, e.g. E8")->required();
        if (xi == true) {
            s->add_option("--xi", c.xi, "Subsystem type (3A2, A1L+C3) or a built-in name (8A1std)");
            s->add_option("--roots", c.roots, "Subsystem generators as a JSON list of vectors");
            s->add_option("--class", c.cls, "Hom class used when --xi is a type");
            s->add_option("--cap", c.cap, "State cap for orbit enumeration");
        }
    };
    auto* build = app.add_subcommand("build", "Root system data");
    common(build, true, false);
    build->add_flag("--dot", c.dot, "Print the Dynkin diagram in DOT");
    build->add_flag("--extended", extended, "Use the extended diagram with marks");
    auto* hom = app.add_subcommand("hom", "W-classes of homomorphisms");
    common(hom, true, false);
    hom->add_option("--xi", c.xi, "Subsystem type")->required();
    auto* perp_c = app.add_subcommand("perp", "Orthogonal complement");
    common(perp_c, true, true);
    auto* closure_c = app.add_subcommand("closure", "S-, L- and perp-closures");
    common(closure_c, true, true);
    auto* orbit = app.add_subcommand("orbit", "Weyl group orbit of a subsystem");
    common(orbit, true, true);
    auto* outs = app.add_subcommand("outsigma", "Diagram automorphisms induced by the Weyl group");
    common(outs, true, true);
    auto* census = app.add_subcommand("census", "Subsystems up to the Weyl group");
    common(census, true, false);
    census->add_flag("--exhaustive", exhaustive, "Exhaustive enumeration (rank at most 4)");
    auto* table = app.add_subcommand("table", "Classification table rows");
    common(table, true, false);
    table->add_option("--xi", c.xi, "Subsystem type; all types when omitted");
    auto* dual = app.add_subcommand("dualpairs", "Dual pairs");
    common(dual, true, false);
    auto* fund = app.add_subcommand("fundamental", "Subsets of the fundamental system of a given type");
    common(fund, true, false);
    fund->add_option("--xi", c.xi, "Subsystem type")->required();
    auto* aff = app.add_subcommand("affine", "Extended (affine) diagrams");
    common(aff, false, false);
    aff->add_option("--rank-bound", rank_bound, "Largest rank")->check(CLI::Range(1, 8));
    aff->add_flag("--dot", c.dot, "Print the diagrams in DOT");
    auto* maxc = app.add_subcommand("maximal", "Maximal subsystems");
    common(maxc, true, false);
    maxc->add_flag("--s-closed", s_closed, "Only S-closed subsystems");
    auto* st = app.add_subcommand("stats", "Census statistics");
    common(st, true, false);
    auto* rc = app.add_subcommand("r", "r(Sigma) and m(Sigma)");
    common(rc, true, false);
    auto* rep = app.add_subcommand("reproduce", "Run the acceptance matrix");
    common(rep, false, false);
    rep->add_option("--scope", scope, "Scope")->check(CLI::IsMember(reproduce_scopes()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        Output o;
        if (*build) o = cmd_build(c, extended);
        else if (*hom) o = cmd_hom(c);
        else if (*perp_c) o = cmd_perp(c);
        else if (*closure_c) o = cmd_closure(c);
        else if (*orbit) o = cmd_orbit(c);
        else if (*outs) o = cmd_outsigma(c);
        else if (*census) o = cmd_census(c, exhaustive);
        else if (*table) o = cmd_table(c);
        else if (*dual) o = cmd_dualpairs(c);
        else if (*fund) o = cmd_fundamental(c);
        else if (*aff) o = cmd_affine(c, rank_bound);
        else if (*maxc) o = cmd_maximal(c, s_closed);
        else if (*st) o = cmd_stats(c);
        else if (*rc) o = cmd_r(c);
        else if (*rep) {
            auto checks = reproduce({scope, c.jobs});
            if (c.format == "json")
                std::cout << format_report_json(checks);
            else
                std::cout << format_report_text(checks);
            return 0;
        }
        emit(o, c.format);
    } catch (const ResourceError& e) {
        error_out(c.format, "resource", e.what());
        return 2;
    } catch (const std::exception& e) {
        error_out(c.format, "domain", e.what());
        return 1;
    }
    return 0;
}
