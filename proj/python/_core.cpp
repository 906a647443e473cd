#include "rootsys/classify.hpp"
#include "rootsys/named.hpp"
#include "rootsys/orbit.hpp"
#include "rootsys/reproduce.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

namespace py = pybind11;
using namespace rootsys;

namespace {

std::string tstr(const RootSystem& sys, const IsoType& t) { return t.empty() ? "0" : t.str(sys.label.series); }

std::vector<std::vector<double>> coords(const RootSystem& sys, const std::vector<int>& idx) {
    std::vector<std::vector<double>> out;
    for (int i : idx) {
        std::vector<double> v;
        for (int x : sys.roots[i]) v.push_back(x / 2.0);
        out.push_back(v);
    }
    return out;
}

Subsystem resolve(const RootSystem& sys, const std::string& xi, int cls) {
    if (is_named(xi)) return named_subsystem(sys, xi);
    auto c = hom_classes(sys, IsoType::parse(xi));
    if (cls < 0 || cls >= int(c.size())) throw Error("no hom class " + std::to_string(cls) + " of " + xi);
    return c[cls].image;
}

py::dict root_system(const std::string& label) {
    auto sys = build_root_system(label);
    py::dict d;
    d["label"] = sys.label.str();
    d["rank"] = sys.rank;
    d["roots"] = sys.size();
    d["weyl_order"] = py::int_(py::str(weyl_order(sys).str()));
    d["marks"] = sys.marks;
    d["simple"] = coords(sys, sys.simple);
    return d;
}

py::list hom(const std::string& xi, const std::string& sigma) {
    auto sys = build_root_system(sigma);
    py::list out;
    for (auto& h : hom_classes(sys, IsoType::parse(xi))) {
        py::dict d;
        d["image"] = tstr(sys, iso_type(sys, h.image.roots));
        d["perp"] = tstr(sys, h.perp_type);
        d["perpperp"] = tstr(sys, h.perp_perp_type);
        d["rep"] = coords(sys, h.rep);
        out.append(d);
    }
    return out;
}

py::list table(const std::string& sigma, const std::string& xi) {
    auto sys = build_root_system(sigma);
    std::vector<IsoType> types;
    if (xi.empty()) {
        std::set<IsoType> s;
        for (auto& c : subsystem_classes(sys)) s.insert(c.type);
        types.assign(s.begin(), s.end());
    } else {
        types.push_back(IsoType::parse(xi));
    }
    py::list out;
    for (auto& t : types)
        for (auto& r : table_row(sys, t).rows) {
            py::dict d;
            d["xi"] = tstr(sys, t);
            d["sigma"] = sys.label.str();
            d["family"] = r.family;
            d["sharp"] = r.sharp;
            d["sharp_xi"] = r.sharp_xi;
            d["sharp_xi_prime"] = r.sharp_xi_prime;
            d["sharp_sigma"] = r.sharp_sigma;
            d["perp"] = r.perp_str();
            d["perpperp"] = r.perp_perp;
            d["P"] = r.p_str();
            d["L"] = r.l_str();
            d["S"] = r.s_str();
            out.append(d);
        }
    return out;
}

py::dict stats_of(const std::string& sigma) {
    auto s = stats(build_root_system(sigma));
    py::dict d;
    d["classes"] = s.classes;
    d["iso_classes"] = s.iso_classes;
    d["s_closed"] = s.s_closed;
    d["l_closed"] = s.l_closed;
    d["perp_closed"] = s.perp_closed;
    d["perp_dense"] = s.perp_dense;
    d["perp_dense_iso"] = s.full_rank;
    d["maximal"] = s.maximal;
    d["maximal_s_closed"] = s.maximal_s_closed;
    d["dual_pairs"] = s.dual_pairs;
    d["special_dual_pairs"] = s.special_dual_pairs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<ResourceError>(m, "ResourceError");
    py::register_exception<Error>(m, "RootSystemError", PyExc_ValueError);

    m.def("root_system", &root_system, py::arg("label"));
    m.def("hom", &hom, py::arg("xi"), py::arg("sigma"));
    m.def("hom_count", [](const std::string& xi, const std::string& sigma) {
        return hom_tuples(build_root_system(sigma), IsoType::parse(xi)).size();
    }, py::arg("xi"), py::arg("sigma"));
    m.def("table", &table, py::arg("sigma"), py::arg("xi") = "");
    m.def("perp", [](const std::string& xi, const std::string& sigma, int cls) {
        auto sys = build_root_system(sigma);
        return tstr(sys, iso_type(sys, perp(sys, resolve(sys, xi, cls).roots).roots));
    }, py::arg("xi"), py::arg("sigma"), py::arg("cls") = 0);
    m.def("closure", [](const std::string& xi, const std::string& sigma, const std::string& kind, int cls) {
        auto sys = build_root_system(sigma);
        auto x = resolve(sys, xi, cls).roots;
        Subsystem y = kind == "S" ? closure_S(sys, x) : kind == "L" ? closure_L(sys, x) : kind == "perp"
            ? closure_perp(sys, x) : throw Error("kind must be S, L or perp");
        return tstr(sys, iso_type(sys, y.roots));
    }, py::arg("xi"), py::arg("sigma"), py::arg("kind"), py::arg("cls") = 0);
    m.def("orbit_size", [](const std::string& xi, const std::string& sigma, int cls) {
        auto sys = build_root_system(sigma);
        py::gil_scoped_release nogil;
        return orbit_of(sys, resolve(sys, xi, cls).roots).size;
    }, py::arg("xi"), py::arg("sigma"), py::arg("cls") = 0);
    m.def("out_sigma_order", [](const std::string& xi, const std::string& sigma, int cls) {
        auto sys = build_root_system(sigma);
        py::gil_scoped_release nogil;
        return out_sigma(sys, resolve(sys, xi, cls).roots).order.convert_to<long long>();
    }, py::arg("xi"), py::arg("sigma"), py::arg("cls") = 0);
    m.def("fundamental_count", [](const std::string& xi, const std::string& sigma) {
        return fundamental_subsets(build_root_system(sigma), IsoType::parse(xi)).count;
    }, py::arg("xi"), py::arg("sigma"));
    m.def("stats", &stats_of, py::arg("sigma"));
    m.def("r", [](const std::string& s) { return r_of(build_root_system(s)); }, py::arg("sigma"));
    m.def("m", [](const std::string& s) { return m_sigma(build_root_system(s)); }, py::arg("sigma"));
    m.def("affine_labels", [](int rank_bound) {
        std::vector<std::string> v;
        for (auto& e : affine_catalog(rank_bound)) v.push_back(e.label);
        return v;
    }, py::arg("rank_bound"));
    m.def("reproduce", [](const std::string& scope, int jobs) {
        std::vector<Check> c;
        {
            py::gil_scoped_release nogil;
            c = reproduce({scope, jobs});
        }
        py::list out;
        for (auto& k : c) {
            py::dict d;
            d["criterion"] = k.criterion;
            d["anchor"] = k.anchor;
            d["expected"] = k.expected;
            d["computed"] = k.computed;
            d["pass"] = k.pass;
            out.append(d);
        }
        return out;
    }, py::arg("scope") = "all", py::arg("jobs") = 1);
}
