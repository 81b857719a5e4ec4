#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "overchev/bounds.hpp"
#include "overchev/frobkernels.hpp"
#include "overchev/groupgen.hpp"
#include "overchev/liealgebra.hpp"
#include "overchev/repmod.hpp"
#include "overchev/u0algebra.hpp"

namespace py = pybind11;
using namespace overchev;

namespace {

char type_char(const std::string& type) {
  if (type.size() != 1) throw std::invalid_argument("type must be a single letter A..G");
  return static_cast<char>(std::toupper(type[0]));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact toolkit for over-restricted representations of restricted Lie "
            "algebras in characteristic p";

  m.def("positive_root_count", [](const std::string& type, int rank) {
    return RootSystem(type_char(type), rank).num_positive_roots();
  });
  m.def("coxeter_number", [](const std::string& type, int rank) {
    return RootSystem(type_char(type), rank).coxeter_number();
  });
  m.def("two_rho_max", [](const std::string& type, int rank) {
    return RootSystem(type_char(type), rank).two_rho_coefficients().second;
  });

  m.def("centre_dimension", [](const std::string& type, int rank, u64 p) {
    return centre_dimension(type_char(type), rank, p);
  });
  m.def("cone_size_and_span", [](const std::string& type, int rank, u32 p) {
    auto cone = RestrictedLieAlgebra(type_char(type), rank, p).np_cone_points();
    return py::make_tuple(cone.points.size(), cone.span_dim);
  });

  m.def("min_prime_for_n", [](const std::string& type, int rank, int n) {
    return min_prime_for_n(type_char(type), rank, n);
  });
  m.def("min_n_for_p", [](const std::string& type, int rank, u64 p) {
    return min_n_for_p(type_char(type), rank, p);
  });
  m.def("integrability_threshold", &integrability_threshold, py::arg("xi"), py::arg("p"));

  m.def("weyl_height", [](int mweight, u32 p) { return height(weyl_module_sl2(mweight, p)); });
  m.def("u0_height", [](u32 p) {
    U0Algebra u(RestrictedLieAlgebra('A', 1, p));
    return height(regular_rep_u0(u));
  });
  m.def("is_over_restricted", [](int mweight, u32 p) {
    return is_over_restricted(weyl_module_sl2(mweight, p)).over_restricted;
  });
  m.def("is_n_over_restricted", [](int mweight, u32 p, int n) {
    return DividedPowerAction(mweight, p, n).n_over_restricted();
  });
  m.def("over_env_dimension", [](u32 p) {
    return U0Algebra(RestrictedLieAlgebra('A', 1, p)).over_env_dimension().dim_closure;
  });
  m.def("deviation_degree", [](u32 p) {
    U0Algebra u(RestrictedLieAlgebra('A', 1, p));
    return u.deviation_degree(u.lie().pos_index(0)).min_max_degree;
  });

  m.def(
      "group_order",
      [](const std::string& rep, int mweight, u32 p) {
        Representation r = rep == "adjoint"
                               ? adjoint_rep(RestrictedLieAlgebra('A', 1, p))
                               : weyl_module_sl2(rep == "natural" ? 1 : mweight, p);
        return pseudo_chevalley_group(r, GeneratorPolicy::RootExponentials).order();
      },
      py::arg("rep") = "natural", py::arg("m") = 1, py::arg("p") = 5);

  m.def("verify_abs_chev_all", [](int mweight, u32 p) {
    RestrictedLieAlgebra g('A', 1, p);
    Representation rep = weyl_module_sl2(mweight, p);
    for (const FpVec& x : g.np_cone_points().points)
      for (std::size_t b = 0; b < g.dim(); ++b)
        if (!verify_abs_chev(rep, x, g.basis_vector(b))) return false;
    return true;
  });

  m.def("phi_report", [](int mweight, u32 p) {
    PhiVerdict v = build_phi(weyl_module_sl2(mweight, p));
    py::dict d;
    d["gv_order"] = v.gv_order;
    d["gg_order"] = v.gg_order;
    d["is_function"] = v.is_function;
    d["kernel_size"] = v.kernel_size;
    d["kernel_central"] = v.kernel_central;
    d["kernel_in_aut"] = v.kernel_in_aut;
    return d;
  });

  m.def("table1_json", &table1_json);
  m.def("table2_json", [] { return table2_json(table2()); });
  m.def("table2_csv", [] { return table2_csv(table2()); });
}
