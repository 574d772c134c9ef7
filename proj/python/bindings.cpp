// Python bindings: string-based interface over the exact core. Polynomials
// and rationals cross the boundary as canonical strings so no precision is
// lost and no numeric types leak.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "solvpair/io.hpp"
#include "solvpair/pair.hpp"
#include "solvpair/slice.hpp"
#include "solvpair/structure.hpp"

namespace py = pybind11;
using namespace solvpair;

namespace {

Poly parse(const SolvablePair& p, const std::string& text) {
    return parse_poly(p.nvars(), text);
}

std::vector<Rat> parse_rats(const std::vector<std::string>& texts) {
    std::vector<Rat> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(rat_from_string(t));
    return out;
}

std::vector<std::string> poly_strs(const std::vector<Poly>& fs) {
    std::vector<std::string> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(f.str());
    return out;
}

std::vector<std::string> rat_strs(const std::vector<Rat>& rs) {
    std::vector<std::string> out;
    out.reserve(rs.size());
    for (const auto& r : rs) out.push_back(rat_to_string(r));
    return out;
}

std::vector<std::vector<std::string>> matrix_strs(const RatMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        out[i].reserve(m.cols());
        for (int j = 0; j < m.cols(); ++j) out[i].push_back(rat_to_string(m.at(i, j)));
    }
    return out;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

SolvablePair pair_from_jordan(const std::vector<int>& blocks,
                              const std::vector<std::string>& offsets) {
    return canonical_pair(blocks, parse_rats(offsets));
}

SolvablePair pair_from_images(const std::vector<std::string>& delta,
                              const std::vector<std::string>& gamma) {
    int n = static_cast<int>(delta.size());
    std::vector<Poly> d, g;
    for (const auto& t : delta) d.push_back(parse_poly(n, t));
    for (const auto& t : gamma) g.push_back(parse_poly(n, t));
    return SolvablePair::validate(Derivation::make(std::move(d)),
                                  Derivation::make(std::move(g)));
}

py::dict reduce_dict(const SolvablePair& p) {
    AdaptedBasis b = jordan_reduce(p);
    py::dict out;
    out["jordan_type"] = b.jordan_type;
    out["offsets"] = rat_strs(b.offsets);
    out["eigenvalues"] = rat_strs(b.eigenvalues);
    out["matrix"] = matrix_strs(b.M);
    return out;
}

py::dict report_dict(const SolvablePair& p) {
    StructureReport rep = structure_report(p);
    py::dict out;
    out["jordan_type"] = rep.jordan_type;
    if (rep.has_offsets)
        out["offsets"] = rat_strs(rep.offsets);
    else
        out["offsets"] = py::none();
    out["trace"] = rat_to_string(rep.trace);
    out["nakayama_c"] = rat_to_string(rep.nakayama_c);
    out["unimodular"] = rep.unimodular;
    out["calabi_yau"] = rep.calabi_yau;
    out["generic"] = rep.generic;
    out["commutative"] = rep.commutative;
    out["pder_dim"] = pder_basis(p).dim();
    std::vector<int> dims;
    for (int d = 0; d <= 3; ++d) dims.push_back(static_cast<int>(center(p, d).size()));
    out["center_dims"] = dims;
    return out;
}

py::dict slice_dict(const SolvablePair& p, const std::string& r, int d) {
    SliceContext c = localize(p, parse(p, r));
    ore_check(c, d);
    py::dict out;
    out["s"] = c.s.str();
    out["uvar"] = c.uvar;
    out["lambda_u"] = rat_to_string(c.lambda_u);
    out["ore_ok"] = true;
    try {
        py::list gens;
        for (const auto& g : kernel_generators(c)) {
            py::dict e;
            e["var"] = g.var;
            e["y"] = g.y.str();
            e["lambda"] = rat_to_string(g.lambda);
            gens.append(e);
        }
        out["kernel"] = gens;
    } catch (const std::invalid_argument&) {
        out["kernel"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_solvpair, m) {
    m.doc() = "Exact star products and Poisson structure from a pair of "
              "derivations (delta, gamma) with [delta, gamma] = delta and "
              "delta locally nilpotent.";

    py::class_<SolvablePair>(m, "Pair")
        .def_static("from_jordan", &pair_from_jordan, py::arg("blocks"),
                    py::arg("offsets"),
                    "Canonical pair from Jordan block sizes and rational "
                    "eigenvalue offsets (strings like '1' or '-2/3').")
        .def_static("from_images", &pair_from_images, py::arg("delta"),
                    py::arg("gamma"),
                    "Pair from explicit generator images; both lists give "
                    "polynomials in X0..X{n-1}, one per variable.")
        .def_static(
            "from_file",
            [](const std::string& path) { return read_pair_file(path).pair; },
            py::arg("path"), "Load a pair from a JSON file.")
        .def_property_readonly("nvars", &SolvablePair::nvars)
        .def_property_readonly("linear", &SolvablePair::linear)
        .def(
            "star",
            [](const SolvablePair& p, const std::string& f, const std::string& g) {
                return star(p, parse(p, f), parse(p, g)).str();
            },
            py::arg("f"), py::arg("g"), "Associative star product f * g.")
        .def(
            "bracket",
            [](const SolvablePair& p, const std::string& f, const std::string& g) {
                return bracket(p, parse(p, f), parse(p, g)).str();
            },
            py::arg("f"), py::arg("g"),
            "Poisson bracket delta(f) gamma(g) - delta(g) gamma(f).")
        .def(
            "star_t",
            [](const SolvablePair& p, const std::string& f, const std::string& g) {
                return star_t(p, parse(p, f), parse(p, g)).str();
            },
            py::arg("f"), py::arg("g"),
            "One-parameter family of products; t is the last variable.")
        .def(
            "phi",
            [](const SolvablePair& p, const std::string& a, const std::string& f) {
                return phi(p, rat_from_string(a), parse(p, f)).str();
            },
            py::arg("a"), py::arg("f"),
            "a-th power of id + delta, an automorphism of the star product.")
        .def(
            "delta_log",
            [](const SolvablePair& p, const std::string& f) {
                return log_delta(p, parse(p, f)).str();
            },
            py::arg("f"),
            "log(id + delta), a derivation of the star product.")
        .def(
            "epsilon",
            [](const SolvablePair& p, const std::string& f) {
                return epsilon(p, parse(p, f));
            },
            py::arg("f"),
            "Nilpotency degree of f under delta; None for f == 0.")
        .def(
            "epsilon_tilde",
            [](const SolvablePair& p, const std::string& f) {
                return epsilon_tilde(p, jordan_chain_basis(p), parse(p, f));
            },
            py::arg("f"),
            "Weighted filtration degree in the adapted variables; None for 0.")
        .def(
            "center",
            [](const SolvablePair& p, int d, bool poisson) {
                return poly_strs(center(p, d, poisson));
            },
            py::arg("d") = 3, py::arg("poisson") = false,
            "Basis of the degree <= d center (star or bracket).")
        .def(
            "kernel",
            [](const SolvablePair& p, int d) {
                return poly_strs(kernel_intersection(p, d));
            },
            py::arg("d") = 3,
            "Basis of ker delta intersect ker gamma in degree <= d.")
        .def(
            "pder_dim",
            [](const SolvablePair& p) { return pder_basis(p).dim(); },
            "Dimension of the space of linear Poisson derivations.")
        .def(
            "strongly_normal",
            [](const SolvablePair& p, int d) {
                std::vector<std::pair<std::string, std::vector<std::string>>> out;
                for (const auto& sp : strongly_normal_space(p, d))
                    out.emplace_back(rat_to_string(sp.eigenvalue), poly_strs(sp.basis));
                return out;
            },
            py::arg("d") = 2,
            "(eigenvalue, basis) pairs of degree-d strongly normal elements.")
        .def(
            "relations",
            [](const SolvablePair& p) {
                std::vector<std::string> out;
                AdaptedBasis b = jordan_reduce(p);
                for (const auto& r : relations(p, b))
                    out.push_back(relation_str(r, default_names(p.nvars())));
                return out;
            },
            "Straightening relations between adapted generators, verified "
            "against the star product.")
        .def(
            "hilbert_check",
            [](const SolvablePair& p, int d) { return hilbert_check(p, d); },
            py::arg("d") = 4,
            "True iff ordered star monomials of degree d are independent.")
        .def(
            "generic_rank",
            [](const SolvablePair& p, int samples, std::uint64_t seed) {
                return generic_rank(p, samples, seed);
            },
            py::arg("samples") = 25, py::arg("seed") = 1,
            "Generic rank of the Poisson matrix at sampled points.")
        .def(
            "modular_derivation",
            [](const SolvablePair& p) {
                return poly_strs(modular_derivation(p).images);
            },
            "Images of the modular derivation; all zero iff unimodular.")
        .def("reduce", &reduce_dict,
             "Adapted basis: jordan_type, offsets, eigenvalues, matrix.")
        .def("report", &report_dict,
             "Structure summary: jordan data, trace, unimodularity, "
             "Calabi-Yau flag, derivation and center dimensions.")
        .def("slice_check", &slice_dict, py::arg("r"), py::arg("d") = 3,
             "Localize at a degree-one slice element r and verify the "
             "reordering laws; reports s and the invariant generators.")
        .def("__repr__", [](const SolvablePair& p) {
            return "Pair(nvars=" + std::to_string(p.nvars()) +
                   (p.linear() ? ", linear" : ", nonlinear") + ")";
        });
}
