#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octaharm/coxeter.hpp"
#include "octaharm/exports.hpp"
#include "octaharm/verify.hpp"

namespace py = pybind11;
using namespace octaharm;

namespace {

ManifoldId manifold_arg(const std::string& name) {
  const auto m = manifold_from_string(name);
  if (!m) throw DomainError("unknown manifold: " + name);
  return *m;
}

py::dict descriptor_dict(const GroupDescriptor& d) {
  py::dict hist;
  for (const auto& [order, count] : d.order_histogram) {
    hist[py::int_(order)] = count;
  }
  py::dict out;
  out["order_histogram"] = hist;
  out["center_size"] = d.center_size;
  out["abelian"] = d.abelian;
  out["matched_template"] = d.matched_template;
  return out;
}

py::dict basis_dict(const InvariantBasis& b) {
  py::list labels;
  for (const BasisLabel& lab : b.labels) {
    py::dict l;
    l["rho"] = lab.rho;
    l["m2"] = lab.m2;
    l["kind"] = lab.kind_name();
    labels.append(l);
  }
  py::dict out;
  out["manifold"] = std::string(to_string(b.manifold));
  out["two_j"] = b.two_j;
  out["frame"] = b.frame;
  out["vectors"] = b.vectors;
  out["labels"] = labels;
  return out;
}

py::dict report_dict(const CheckReport& report) {
  py::list items;
  for (const auto& item : report.items) {
    py::dict entry;
    entry["name"] = item.name;
    entry["pass"] = item.pass;
    entry["residual"] = item.residual;
    entry["detail"] = item.detail;
    items.append(entry);
  }
  py::dict out;
  out["items"] = items;
  out["all_pass"] = report.all_pass();
  return out;
}

}  // namespace

PYBIND11_MODULE(_octaharm, m) {
  m.doc() =
      "Deck groups of the octahedral spherical 3-manifolds N4, N5, N6 and "
      "their invariant harmonic bases";

  py::register_exception<Error>(m, "OctaharmError");

  py::class_<UnitSpinor>(m, "Spinor")
      .def(py::init([](const Eigen::Matrix2cd& mat) {
             return UnitSpinor(mat(0, 0), mat(0, 1), mat(1, 0), mat(1, 1));
           }),
           py::arg("matrix"))
      .def_static("identity", [] { return UnitSpinor(); })
      .def("matrix", &UnitSpinor::matrix)
      .def("adjoint", &UnitSpinor::adjoint)
      .def("negated", &UnitSpinor::negated)
      .def("half_trace", &UnitSpinor::half_trace)
      .def("distance", &UnitSpinor::distance)
      .def("__mul__", [](const UnitSpinor& a, const UnitSpinor& b) { return a * b; })
      .def("__repr__", [](const UnitSpinor& u) {
        std::ostringstream out;
        out << "Spinor(a=" << u.a() << ", b=" << u.b() << ")";
        return out.str();
      });

  m.def("point_to_spinor", [](const Eigen::Vector4d& x) {
    return point_to_spinor(Point4::from_vector(x));
  });
  m.def("spinor_to_point",
        [](const UnitSpinor& u) { return spinor_to_point(u).vector(); });

  py::class_<RotationPair>(m, "RotationPair")
      .def(py::init<const UnitSpinor&, const UnitSpinor&>(), py::arg("left"),
           py::arg("right"))
      .def_static("identity", [] { return RotationPair(); })
      .def_static("inversion", &RotationPair::inversion)
      .def_property_readonly("left", &RotationPair::left)
      .def_property_readonly("right", &RotationPair::right)
      .def("inverse", &RotationPair::inverse)
      .def("act", py::overload_cast<const UnitSpinor&>(&RotationPair::act,
                                                       py::const_))
      .def("act_point",
           [](const RotationPair& g, const Eigen::Vector4d& x) {
             return g.act(Point4::from_vector(x)).vector();
           })
      .def("to_so4", &RotationPair::to_so4)
      .def("distance", &RotationPair::distance)
      .def("is_identity", &RotationPair::is_identity, py::arg("tol") = kTableTol)
      .def("__mul__",
           [](const RotationPair& a, const RotationPair& b) { return a * b; });

  m.def("reflect", [](const Eigen::Vector4d& x, int s) {
    return reflect(Point4::from_vector(x), s).vector();
  });
  m.def("reflection_matrix", &reflection_matrix);
  m.def("rotation_pair", &rotation_pair, py::arg("i"), py::arg("j"));
  m.def("cross_check_pair_vs_reflections", &cross_check_pair_vs_reflections);
  m.def(
      "weyl_closure_order",
      [](const std::vector<int>& indices, std::size_t cap) {
        std::vector<Eigen::Matrix4d> gens;
        gens.reserve(indices.size());
        for (int s : indices) gens.push_back(reflection_matrix(s));
        return close_group(gens, cap).order();
      },
      py::arg("indices"), py::arg("cap") = 10000);

  py::class_<DeckGroup>(m, "DeckGroup")
      .def_property_readonly(
          "manifold", [](const DeckGroup& d) { return std::string(to_string(d.manifold())); })
      .def("__len__", [](const DeckGroup& d) { return d.elements().size(); })
      .def("elements",
           [](const DeckGroup& d) {
             std::vector<RotationPair> out;
             for (const DeckElement& el : d.elements()) out.push_back(el.pair);
             return out;
           })
      .def("words",
           [](const DeckGroup& d) {
             std::vector<std::string> out;
             for (const DeckElement& el : d.elements()) out.push_back(el.word);
             return out;
           })
      .def("generators",
           [](const DeckGroup& d) {
             return std::vector<RotationPair>(d.generators().begin(),
                                              d.generators().end());
           })
      .def("centers",
           [](const DeckGroup& d) {
             const auto centers = center_positions(d);
             Eigen::MatrixXd out(centers.size(), 4);
             for (std::size_t i = 0; i < centers.size(); ++i)
               out.row(static_cast<Eigen::Index>(i)) = centers[i].vector();
             return out;
           })
      .def("identify", [](const DeckGroup& d) { return descriptor_dict(identify_group(d)); })
      .def("to_json", [](const DeckGroup& d) { return deck_group_json(d); });

  m.def("build_deck_group",
        [](const std::string& name) { return build_deck_group(manifold_arg(name)); });
  m.def("generator_word_texts", [](const std::string& name) {
    std::vector<std::string> out;
    for (const GeneratorWord& w : generator_words(manifold_arg(name)))
      out.push_back(w.text());
    return out;
  });
  m.def("compare_center_sets",
        [](const DeckGroup& a, const DeckGroup& b) { return compare_center_sets(a, b); });
  m.def("verify_t24_tables", [](const DeckGroup& d) {
    return report_dict(verify_t24_tables(d, /*throw_on_failure=*/false));
  });
  m.def("verify_n4_structure", [](const DeckGroup& d) {
    return report_dict(verify_n4_structure(d, /*throw_on_failure=*/false));
  });
  m.def("gluing_data", [](const std::string& name) {
    const GluingScheme g = gluing_data(manifold_arg(name));
    py::dict out;
    out["faces"] = g.faces;
    out["edges"] = g.edges;
    return out;
  });

  m.def("wigner_d",
        [](int two_j, const UnitSpinor& u) { return wigner_d(Spin(two_j), u); });
  m.def("su2_character",
        [](int two_j, const UnitSpinor& w) { return su2_character(Spin(two_j), w); });
  m.def("pair_action", [](int two_j, const RotationPair& g) {
    return pair_action(Spin(two_j), g);
  });
  m.def("multiplicity",
        [](int two_j, const DeckGroup& d) { return multiplicity(Spin(two_j), d); });
  m.def("multiplicity_raw", [](int two_j, const DeckGroup& d) {
    return multiplicity_raw(Spin(two_j), d);
  });

  m.def("projector",
        [](int two_j, const DeckGroup& d) { return projector(Spin(two_j), d); });
  m.def("invariant_basis", [](int two_j, const DeckGroup& d) {
    return basis_dict(invariant_basis(Spin(two_j), d));
  });
  m.def("n4_closed_form_basis",
        [](int two_j) { return basis_dict(n4_closed_form_basis(Spin(two_j))); });
  m.def("n4_closed_form_count",
        [](int two_j) { return n4_closed_form_count(Spin(two_j)); });
  m.def("n4_diagonalizer_matrix", [] { return n4_diagonalizer().matrix(); });
  m.def("closed_form_matches_projector", [](int two_j) {
    const DeckGroup d = build_deck_group(ManifoldId::N4);
    const Spin j(two_j);
    return compare_spans(invariant_basis(j, d),
                         to_original_frame(n4_closed_form_basis(j)));
  });

  m.def("basis_json", [](int two_j, const std::string& name) {
    const DeckGroup d = build_deck_group(manifold_arg(name));
    return basis_json(invariant_basis(Spin(two_j), d));
  });
  m.def(
      "run_verification",
      [](const std::vector<std::string>& manifolds, std::uint64_t seed) {
        VerifyOptions opts;
        if (!manifolds.empty()) {
          opts.manifolds.clear();
          for (const std::string& name : manifolds)
            opts.manifolds.push_back(manifold_arg(name));
        }
        opts.seed = seed;
        const VerifyReport report = run_verification(opts);
        py::dict out = report_dict(report.checks);
        out["text"] = report.text();
        out["coverage_complete"] = report.coverage_complete;
        return out;
      },
      py::arg("manifolds") = std::vector<std::string>{}, py::arg("seed") = 0);

  m.attr("__version__") = "0.1.0";
}
