#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parhitchin/campaign.hpp"
#include "parhitchin/census.hpp"
#include "parhitchin/combinatorics.hpp"
#include "parhitchin/local_higgs.hpp"
#include "parhitchin/spectral.hpp"

namespace py = pybind11;
using namespace parhitchin;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

SPoly poly_from_py(const std::vector<std::vector<int64_t>>& leading_first, uint32_t p,
                   uint32_t m, int prec) {
    return SPoly::from_ints(field_of(p, m), prec, leading_first);
}

std::vector<std::vector<int64_t>> poly_to_py(const SPoly& f) {
    std::vector<std::vector<int64_t>> out;
    for (int j = f.degree(); j >= 0; --j) {
        std::vector<int64_t> c;
        for (int i = 0; i < f.coeff(j).precision(); ++i)
            c.push_back(int64_t(f.coeff(j).coeff(i)));
        out.push_back(std::move(c));
    }
    return out;
}

ParabolicData parabolic_from_py(int genus, int rank, int degree,
                                const std::vector<std::vector<int>>& levis) {
    std::vector<MarkedPoint> pts;
    for (const auto& m : levis) pts.emplace_back(LeviType(m));
    return ParabolicData(genus, rank, degree, std::move(pts));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact-arithmetic core for parabolic spectral data";

    py::register_exception<Error>(mod, "LibraryError");

    // combinatorics
    mod.def("conjugate",
            [](const std::vector<int>& p) { return conjugate(Partition(p)).parts(); });
    mod.def("level_function",
            [](const std::vector<int>& p) { return level_function(Partition(p)).values(); });
    mod.def("sort_to_partition",
            [](const std::vector<int>& m) { return sort_to_partition(LeviType(m)).parts(); });
    mod.def("flag_dimension", [](const std::vector<int>& m) { return flag_dimension(LeviType(m)); });
    mod.def("weyl_coset_count",
            [](const std::vector<int>& m) { return to_int64(weyl_coset_count(LeviType(m))); });
    mod.def("min_pair_sum",
            [](const std::vector<int>& p) { return to_int64(min_pair_sum(Partition(p))); });

    // census: points given as list of Levi types (canonical weights)
    mod.def(
        "census",
        [](int genus, int rank, int degree, const std::vector<std::vector<int>>& levis) {
            return json_to_py(census_to_json(census(parabolic_from_py(genus, rank, degree, levis))));
        },
        py::arg("genus"), py::arg("rank"), py::arg("degree"), py::arg("levis"));

    // series ring
    mod.def(
        "invert_unit",
        [](const std::vector<int64_t>& coeffs, uint32_t p, uint32_t m, int prec) {
            Series s = Series::from_ints(field_of(p, m), prec, coeffs);
            Series inv = s.inverse();
            std::vector<int64_t> out;
            for (int i = 0; i < inv.precision(); ++i) out.push_back(int64_t(inv.coeff(i)));
            return out;
        },
        py::arg("coeffs"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);
    mod.def(
        "is_eisenstein",
        [](const std::vector<std::vector<int64_t>>& poly, uint32_t p, uint32_t m, int prec) {
            return is_eisenstein(poly_from_py(poly, p, m, prec));
        },
        py::arg("poly"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);
    mod.def(
        "resultant_valuation",
        [](const std::vector<std::vector<int64_t>>& f, const std::vector<std::vector<int64_t>>& g,
           uint32_t p, uint32_t m, int prec) -> py::object {
            ValOrBound v =
                resultant_valuation(poly_from_py(f, p, m, prec), poly_from_py(g, p, m, prec));
            if (v.exact) return py::int_(v.value);
            return py::make_tuple("at_least", v.value);
        },
        py::arg("f"), py::arg("g"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);

    // local Higgs
    mod.def(
        "random_char_poly",
        [](const std::vector<int>& levi, uint32_t p, uint32_t m, int prec, uint64_t seed) {
            FlaggedLattice lat(LeviType(levi), FieldSpec{p, m}, prec);
            return poly_to_py(char_poly(random_strong_parabolic(lat, seed)));
        },
        py::arg("levi"), py::arg("p"), py::arg("m"), py::arg("prec"), py::arg("seed"));
    mod.def(
        "verify_valuation_bounds",
        [](const std::vector<std::vector<int64_t>>& poly, const std::vector<int>& levi, uint32_t p,
           uint32_t m, int prec) {
            SPoly f = poly_from_py(poly, p, m, prec);
            BoundReport rep = verify_valuation_bounds(f, level_function(sort_to_partition(LeviType(levi))));
            py::list rows;
            for (const BoundRow& r : rep.rows) {
                py::dict d;
                d["i"] = r.index;
                d["gamma"] = r.gamma;
                d["pass"] = r.pass;
                if (r.valuation) d["valuation"] = *r.valuation;
                rows.append(d);
            }
            return py::make_tuple(rep.pass, rows);
        },
        py::arg("poly"), py::arg("levi"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);
    mod.def(
        "jordan_type_mod_t",
        [](const std::vector<int>& levi, uint32_t p, uint32_t m, int prec, uint64_t seed) {
            FlaggedLattice lat(LeviType(levi), FieldSpec{p, m}, prec);
            return jordan_type_mod_t(random_strong_parabolic(lat, seed)).block_sizes.parts();
        },
        py::arg("levi"), py::arg("p"), py::arg("m"), py::arg("prec"), py::arg("seed"));

    // spectral
    mod.def(
        "newton_polygon",
        [](const std::vector<std::vector<int64_t>>& poly, uint32_t p, uint32_t m, int prec) {
            return newton_polygon(poly_from_py(poly, p, m, prec)).vertices;
        },
        py::arg("poly"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);
    mod.def("expected_polygon", [](const std::vector<int>& partition) {
        return expected_polygon(level_function(Partition(partition))).vertices;
    });
    mod.def(
        "genericity_check",
        [](const std::vector<std::vector<int64_t>>& poly, uint32_t p, uint32_t m, int prec) {
            GenericityReport r = genericity_check(poly_from_py(poly, p, m, prec));
            return py::make_tuple(r.ok, r.reason);
        },
        py::arg("poly"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);
    mod.def(
        "factor_spectral",
        [](const std::vector<std::vector<int64_t>>& poly, uint32_t p, uint32_t m, int prec,
           int extension_cap) {
            SpectralFactorization fac =
                factor_spectral(poly_from_py(poly, p, m, prec), SpectralOptions{extension_cap});
            py::list factors;
            for (const auto& f : fac.factors) factors.append(poly_to_py(f.factor));
            py::dict out;
            out["factors"] = factors;
            out["field"] = py::make_tuple(fac.coefficient_field.p, fac.coefficient_field.m);
            out["product_precision"] = fac.product_precision;
            return out;
        },
        py::arg("poly"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32,
        py::arg("extension_cap") = 6);
    mod.def(
        "ramification_profile",
        [](const std::vector<std::vector<int64_t>>& poly, uint32_t p, uint32_t m, int prec) {
            BranchProfile bp = ramification_profile(poly_from_py(poly, p, m, prec));
            return py::make_tuple(bp.degrees, bp.branch_count);
        },
        py::arg("poly"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);
    mod.def(
        "local_delta",
        [](const std::vector<std::vector<int64_t>>& poly, uint32_t p, uint32_t m, int prec) {
            return local_delta(poly_from_py(poly, p, m, prec));
        },
        py::arg("poly"), py::arg("p"), py::arg("m") = 1, py::arg("prec") = 32);
    mod.def(
        "sample_spectral_generic",
        [](const std::vector<int>& levi, uint32_t p, uint32_t m, int prec, uint64_t seed) {
            LevelFunction g = level_function(sort_to_partition(LeviType(levi)));
            return poly_to_py(sample_spectral_generic(g, FieldSpec{p, m}, prec, seed));
        },
        py::arg("levi"), py::arg("p"), py::arg("m"), py::arg("prec"), py::arg("seed"));

    // campaigns
    mod.def(
        "run_campaign",
        [](const std::string& config_json, int jobs) {
            CampaignConfig cfg = CampaignConfig::from_json(nlohmann::json::parse(config_json));
            return run_campaign(cfg, jobs).to_json().dump(2);
        },
        py::arg("config_json"), py::arg("jobs") = 1);
    mod.def("experiment_registry", []() { return experiment_registry(); });

    mod.attr("__version__") = kToolVersion;
}
