#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <utility>
#include <vector>

#include "matchc/homology.hpp"
#include "matchc/koszul.hpp"
#include "matchc/matching_complex.hpp"
#include "matchc/partition.hpp"

namespace py = pybind11;

namespace {

// Exact conversion of an arbitrary-precision integer to a Python int.
py::object to_py_int(const matchc::BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic homology of block matching complexes (thin binding)";

  m.def(
      "partitions",
      [](int n, int max_rows) {
        std::vector<std::vector<int>> out;
        for (const matchc::Partition& p : matchc::enumerate_partitions(n, max_rows))
          out.push_back(p.parts());
        return out;
      },
      py::arg("n"), py::arg("max_rows") = 0,
      "All partitions of n in canonical order, optionally with at most max_rows rows.");

  m.def(
      "dim_sn",
      [](const std::vector<int>& lam) {
        return to_py_int(matchc::dim_sn(matchc::Partition(std::vector<int>(lam))));
      },
      py::arg("partition"), "Dimension of the symmetric-group irreducible (hook lengths).");

  m.def(
      "dim_gl",
      [](const std::vector<int>& lam, int vars) {
        return to_py_int(matchc::dim_gl(matchc::Partition(std::vector<int>(lam)), vars));
      },
      py::arg("partition"), py::arg("vars"),
      "Dimension of the polynomial GL irreducible in the given number of variables.");

  m.def(
      "betti",
      [](int d, int n) {
        return matchc::betti_numbers(matchc::build_matching_complex(d, n));
      },
      py::arg("d"), py::arg("n"),
      "Reduced rational Betti numbers of the matching complex (nonzero degrees only).");

  m.def(
      "equivariant",
      [](int d, int n) {
        std::map<int, std::vector<std::pair<std::vector<int>, long long>>> out;
        const matchc::EquivariantHomology h =
            matchc::equivariant_homology(matchc::build_matching_complex(d, n));
        for (const auto& [i, rep] : h.entries)
          for (const auto& [lam, mult] : rep.terms()) out[i].emplace_back(lam.parts(), mult);
        return out;
      },
      py::arg("d"), py::arg("n"),
      "Reduced homology as symmetric-group representations: degree -> [(partition, mult)].");

  m.def(
      "koszul_dim",
      [](int vars, int d, int b, int p, int q, long long budget) {
        return matchc::koszul_dim_direct(vars, d, b, p, q, budget);
      },
      py::arg("vars"), py::arg("d"), py::arg("b"), py::arg("p"), py::arg("q"),
      py::arg("budget") = 200000,
      "Dimension of one Koszul cohomology space of a Veronese strand module.");

  m.def(
      "dump_faces",
      [](int d, int n, int r) {
        return matchc::dump_faces(matchc::build_matching_complex(d, n), r);
      },
      py::arg("d"), py::arg("n"), py::arg("r"),
      "The degree-r faces, one per line, blocks separated by '|'.");
}
