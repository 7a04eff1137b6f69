#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiedler/classify.hpp"
#include "fiedler/cycle_inverse.hpp"
#include "fiedler/error.hpp"
#include "fiedler/spectral.hpp"
#include "fiedler/transform.hpp"
#include "fiedler/tree_inverse.hpp"

namespace py = pybind11;
using namespace fiedler;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Tree make_tree(std::size_t n, const EdgeList& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) list.emplace_back(a, b);
  return Tree(n, std::move(list));
}

EdgeList edge_list(std::span<const Edge> edges) {
  EdgeList out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<double> values_of(const WeightAssignment& w) { return {w.values().begin(), w.values().end()}; }

py::dict char_set_dict(const CharacteristicSet& s) {
  py::dict d;
  d["kind"] = s.kind == CharacteristicSet::Kind::TypeI ? "I" : "II";
  d["vertices"] = s.vertices;
  return d;
}

py::dict weighted_tree_dict(const WeightedTree& wt) {
  py::dict d;
  d["n"] = wt.tree().n();
  d["edges"] = edge_list(wt.tree().edges());
  d["weights"] = values_of(wt.weights());
  d["lambda2"] = wt.lambda2();
  d["char_set"] = char_set_dict(wt.char_set());
  return d;
}

py::dict spectrum(std::size_t n, const EdgeList& edges, const std::vector<double>& weights) {
  std::vector<Edge> list;
  for (const auto& [a, b] : edges) list.emplace_back(a, b);
  const auto fd = fiedler::fiedler(laplacian(Graph(n, list), WeightAssignment(weights)));
  py::dict d;
  d["lambda2"] = fd.lambda2;
  d["multiplicity"] = fd.multiplicity;
  d["basis"] = fd.basis;
  d["eigenvalues"] = fd.spectrum.values;
  return d;
}

py::object classify_tree(std::size_t n, const EdgeList& edges, const std::vector<double>& x, double zero_tol) {
  const auto v = classify_tree_vector(make_tree(n, edges), x, {zero_tol});
  py::dict d;
  if (const auto* t1 = std::get_if<TypeIVerdict>(&v)) {
    d["kind"] = "I";
    d["char_vertex"] = t1->char_vertex;
    std::vector<std::string> signs;
    for (Sign s : t1->branch_signs) signs.emplace_back(to_string(s));
    d["branch_signs"] = signs;
  } else if (const auto* t2 = std::get_if<TypeIIVerdict>(&v)) {
    d["kind"] = "II";
    d["negative_end"] = t2->negative_end;
    d["positive_end"] = t2->positive_end;
  } else {
    const auto& r = std::get<Rejection>(v);
    d["kind"] = py::none();
    d["reason"] = r.reason;
    d["witness"] = r.witness;
  }
  return std::move(d);
}

py::dict classify_cycle(const std::vector<double>& x, double zero_tol) {
  const auto v = classify_cycle_vector(Cycle(x.size()), x, {zero_tol});
  py::dict d;
  d["periodic"] = v.periodic;
  d["balanced"] = v.balanced;
  d["reason"] = v.reason;
  d["witness"] = v.witness;
  if (v.periodic) {
    d["peaks"] = std::vector<Vertex>{v.p, v.p_prime};
    d["valleys"] = std::vector<Vertex>{v.q, v.q_prime};
  }
  return d;
}

py::dict tree_inverse_py(std::size_t n, const EdgeList& edges, const std::vector<double>& x, double lam,
                         const std::map<std::size_t, double>& mu,
                         const std::map<std::size_t, std::vector<double>>& filler) {
  const TypeIOptions opts{mu, filler};
  auto res = tree_inverse(make_tree(n, edges), x, opts);
  if (lam != 1.0) res = general_lambda_rescale(res, lam);
  py::dict d;
  d["weights"] = values_of(res.weights);
  d["lambda"] = res.achieved_lambda;
  d["char_set"] = char_set_dict(res.char_set);
  d["predicted_multiplicity"] = res.predicted_multiplicity;
  py::list params;
  for (const auto& p : res.free_branch_params) {
    py::dict b;
    b["branch"] = p.branch;
    b["mu"] = p.mu;
    b["filler"] = p.filler;
    params.append(b);
  }
  d["zero_branches"] = params;
  return d;
}

py::dict cycle_inverse_py(const std::vector<double>& x, double lam, double zero_fill, std::optional<double> h) {
  const auto res = cycle_inverse(Cycle(x.size()), x, lam, zero_fill, h);
  py::dict d;
  d["weights"] = values_of(res.weights);
  d["lambda"] = res.achieved_lambda;
  d["h"] = res.h;
  d["rotation"] = res.rotation;
  d["landed_index"] = res.landed_index;
  d["residual"] = res.residual;
  if (res.interval) d["interval"] = std::make_pair(res.interval->lo, res.interval->hi);
  else d["interval"] = py::none();
  return d;
}

py::dict transform_py(std::size_t n, const EdgeList& edges, const std::vector<double>& weights, bool contracting) {
  const WeightedTree wt(make_tree(n, edges), WeightAssignment(weights));
  const auto res = contracting ? contract(wt) : subdivide(wt);
  auto d = weighted_tree_dict(res.result);
  py::list map;
  for (auto v : res.label_map) map.append(v == npos ? py::object(py::none()) : py::int_(v));
  d["label_map"] = map;
  d[contracting ? "merged_edge" : "new_vertex"] = res.special;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fiedler vectors of weighted trees and cycles: forward computation, classification and inverse problems.";

  static py::exception<Error> fiedler_error(m, "FiedlerError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(fiedler_error)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("witness") = e.witness();
      PyErr_SetObject(fiedler_error.ptr(), exc.ptr());
    }
  });

  m.def("spectrum", &spectrum, py::arg("n"), py::arg("edges"), py::arg("weights"),
        "lambda2, its multiplicity, an orthonormal eigenspace basis and all eigenvalues of a weighted graph.");
  m.def(
      "characteristic_set",
      [](std::size_t n, const EdgeList& edges, const std::vector<double>& weights) {
        return char_set_dict(locate_characteristic_set(laplacian(make_tree(n, edges), WeightAssignment(weights))));
      },
      py::arg("n"), py::arg("edges"), py::arg("weights"));
  m.def("classify_tree", &classify_tree, py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("zero_tol") = 0.0);
  m.def("classify_cycle", &classify_cycle, py::arg("x"), py::arg("zero_tol") = 0.0);
  m.def("tree_inverse", &tree_inverse_py, py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("lam") = 1.0,
        py::arg("mu") = std::map<std::size_t, double>{},
        py::arg("filler") = std::map<std::size_t, std::vector<double>>{});
  m.def("cycle_inverse", &cycle_inverse_py, py::arg("x"), py::arg("lam") = 1.0, py::arg("zero_fill") = 1.0,
        py::arg("h") = std::nullopt);
  m.def(
      "contract",
      [](std::size_t n, const EdgeList& edges, const std::vector<double>& w) { return transform_py(n, edges, w, true); },
      py::arg("n"), py::arg("edges"), py::arg("weights"));
  m.def(
      "subdivide",
      [](std::size_t n, const EdgeList& edges, const std::vector<double>& w) {
        return transform_py(n, edges, w, false);
      },
      py::arg("n"), py::arg("edges"), py::arg("weights"));
  m.def("series_weight", &series_weight, py::arg("w1"), py::arg("w2"));
}
