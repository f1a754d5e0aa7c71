#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pmd/cli.hpp"
#include "pmd/io.hpp"
#include "pmd/structure.hpp"

namespace py = pybind11;
using namespace pmd;

namespace {

py::list barcode_to_py(const Barcode& bc) {
    py::list out;
    for (const Bar& b : bc.bars) {
        py::dict d;
        d["carrier"] = b.carrier;
        d["multiplicity"] = b.multiplicity;
        out.append(d);
    }
    return out;
}

py::list blocklist_to_py(const BlockList& bl) {
    py::list out;
    for (const BlockEntry& e : bl.blocks) {
        py::dict d;
        d["carrier"] = e.carrier;
        std::vector<std::string> names;
        for (BlockType t : e.types) names.push_back(block_type_name(t));
        d["types"] = names;
        d["multiplicity"] = e.multiplicity;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_pmd, m) {
    m.doc() = "pointwise finite dimensional persistence modules over finite posets";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<Counterexample>(m, "Counterexample", base.ptr());

    py::class_<PersistenceModule>(m, "Module")
        .def_static("from_json", &parse_module, py::arg("text"),
                    "parse and validate a module document")
        .def("to_json", &serialize_module)
        .def_property_readonly("field_char",
                               [](const PersistenceModule& M) { return M.field.p; })
        .def_property_readonly("size",
                               [](const PersistenceModule& M) { return M.poset->size; })
        .def_property_readonly("dims", [](const PersistenceModule& M) { return M.dims; })
        .def_property_readonly("total_dim",
                               [](const PersistenceModule& M) { return total_dim(M); })
        .def("dualize", [](const PersistenceModule& M) { return dualize(M); })
        .def("__eq__", [](const PersistenceModule& M, const PersistenceModule& N) {
            return modules_equal(M, N);
        })
        .def("__repr__", [](const PersistenceModule& M) {
            std::ostringstream ss;
            ss << "<pmd.Module " << M.poset->size << " elements, total dim " << total_dim(M)
               << ", F_" << M.field.p << ">";
            return ss.str();
        });

    m.def(
        "decompose",
        [](const PersistenceModule& M, std::uint64_t seed) {
            Decomposition D = decompose(M, seed);
            py::list out;
            for (const Summand& s : D.summands) {
                py::dict d;
                std::vector<int> support;
                for (int x = 0; x < s.module.poset->size; ++x)
                    if (s.module.dims[x] > 0) support.push_back(x);
                d["support"] = support;
                d["dims"] = s.module.dims;
                d["module"] = s.module;
                d["certificate"] =
                    py::dict(py::arg("kind") = (s.certificate.kind == CertificateKind::EndDimOne
                                                    ? "end_dim_one"
                                                    : "heuristic_exhausted"),
                             py::arg("trials") = s.certificate.trials);
                out.append(d);
            }
            return out;
        },
        py::arg("module"), py::arg("seed") = 0,
        "split into indecomposable summands; each entry reports support, dims and certificate");

    m.def(
        "barcode", [](const PersistenceModule& M) { return barcode_to_py(barcode_chain(M)); },
        py::arg("module"), "interval barcode of a chain module");

    m.def(
        "zigzag_barcode",
        [](const PersistenceModule& M, std::uint64_t seed) {
            return barcode_to_py(zigzag_barcode(M, seed));
        },
        py::arg("module"), py::arg("seed") = 0,
        "barcode of a fence module, cross-checked along two independent routes");

    m.def(
        "blocks",
        [](const PersistenceModule& M, std::uint64_t seed) {
            BlockList bl = M.poset->kind == ShapeKind::Triangle
                               ? verify_triangle_blocks(M, seed)
                               : block_decompose(M, seed);
            return blocklist_to_py(bl);
        },
        py::arg("module"), py::arg("seed") = 0,
        "block decomposition of a middle exact grid or triangle module");

    m.def(
        "middle_exact",
        [](const PersistenceModule& M) {
            MiddleExactReport rep = check_middle_exact(M);
            py::dict d;
            d["ok"] = rep.ok;
            d["all_short_exact"] = rep.all_short_exact;
            d["squares"] = (int)rep.squares.size();
            if (rep.ok)
                d["first_failure"] = py::none();
            else {
                const SquareReport& s = rep.squares[rep.first_failure];
                d["first_failure"] = py::make_tuple(s.a, s.b, s.c, s.d);
            }
            return d;
        },
        py::arg("module"), "exactness of every unit square");

    m.def(
        "extend", [](const PersistenceModule& M) { return extend_zigzag(M); },
        py::arg("module"), "extend a fence module to its bounding window grid");

    m.def(
        "generate_intervals",
        [](const std::string& spec_text, std::uint64_t seed) {
            GeneratorSpec spec = parse_interval_spec(spec_text);
            spec.seed = seed;
            GeneratedModule g = random_module(spec, FieldSpec(default_field_char()));
            py::list truth;
            for (const auto& [carrier, mult] : g.ground_truth)
                truth.append(py::make_tuple(carrier, mult));
            return py::make_tuple(g.module, truth);
        },
        py::arg("spec"), py::arg("seed") = 0,
        "seeded scrambled interval sum from a generator spec document");

    m.def(
        "sublevel",
        [](const std::string& text) {
            return sublevel_h0(parse_function_spec(text), FieldSpec(default_field_char()));
        },
        py::arg("spec"), "sublevel set persistence of a sampled function");

    m.def(
        "interlevel",
        [](const std::string& text) {
            return interlevel_h0(parse_function_spec(text), FieldSpec(default_field_char()));
        },
        py::arg("spec"), "interlevel persistence of a sampled function over two grids");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "drive the command line interface in process: (exit, stdout, stderr)");
}
