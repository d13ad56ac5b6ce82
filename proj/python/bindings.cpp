#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "decmin/applications.hpp"
#include "decmin/canonical.hpp"
#include "decmin/engine.hpp"
#include "decmin/io.hpp"
#include "decmin/matroid.hpp"
#include "decmin/orientation.hpp"

namespace py = pybind11;
using namespace decmin;

namespace {

std::string order_name(Order o) { return to_string(o); }

BaseHandle table_handle(int n, const std::vector<std::optional<Int>>& values,
                        const std::optional<IntVec>& lower, const std::optional<IntVec>& upper) {
  if (values.size() != bit(n)) throw Error("need one value per subset");
  std::vector<Int> v;
  for (const auto& x : values) v.push_back(x.value_or(kNegInf));
  BaseHandle b = BaseHandle::of(make_table(n, std::move(v)));
  if (lower || upper)
    b = b.with_box(lower.value_or(IntVec(n, kNegInf)), upper.value_or(IntVec(n, kPosInf)));
  return b;
}

std::vector<std::vector<int>> mask_lists(const std::vector<Mask>& ms) {
  std::vector<std::vector<int>> out;
  for (Mask m : ms) out.push_back(elements(m));
  return out;
}

// Same tie-break as the command-line tool: cheapest dec-min for costs 0..n-1.
IntVec representative(const BaseHandle& b) {
  IntVec c(b.n);
  for (int i = 0; i < b.n; ++i) c[i] = i;
  return cheapest_decmin(b, c, strongly_poly_decmin(b));
}

py::dict decomposition_dict(const CanonicalDecomposition& d) {
  py::dict out;
  out["chain"] = mask_lists(d.chain);
  out["partition"] = mask_lists(d.partition);
  out["betas"] = d.betas;
  out["r"] = d.r;
  out["delta_star"] = d.delta_star;
  out["pi_star"] = d.pi_star;
  out["value_fixed"] = mask_lists(d.value_fixed);
  return out;
}

Graph make_graph(int n, const std::vector<std::vector<Int>>& edges) {
  Graph g;
  g.n = n;
  for (const auto& e : edges) {
    if (e.size() < 2 || e.size() > 5) throw Error("edges are (u, v[, ell[, cost_uv, cost_vu]])");
    g.add_edge(static_cast<int>(e[0]), static_cast<int>(e[1]), e.size() > 2 ? e[2] : 1,
               e.size() > 3 ? e[3] : 0, e.size() > 4 ? e[4] : 0);
  }
  return g;
}

NodeBounds make_bounds(int n, const std::optional<IntVec>& f, const std::optional<IntVec>& g) {
  NodeBounds b = NodeBounds::none(n);
  if (f) b.f = *f;
  if (g) b.g = *g;
  return b;
}

py::dict orientation_dict(const Orientation& o) {
  py::dict out;
  std::vector<bool> fwd(o.forward.begin(), o.forward.end());
  out["forward"] = fwd;
  out["indeg"] = o.indeg;
  out["cost"] = o.cost;
  return out;
}

}  // namespace

PYBIND11_MODULE(_decmin, m) {
  m.doc() = "Decreasingly minimal elements of integral base-polyhedra";

  // Translators run newest first, so the subclass goes last.
  auto& base = py::register_exception<Error>(m, "DecminError", PyExc_RuntimeError);
  py::register_exception<Infeasible>(m, "Infeasible", base.ptr());

  m.def("dec_compare", [](const IntVec& x, const IntVec& y) { return order_name(dec_compare(x, y)); });
  m.def("inc_compare", [](const IntVec& x, const IntVec& y) { return order_name(inc_compare(x, y)); });

  m.def(
      "decmin",
      [](int n, const std::vector<std::optional<Int>>& values, const std::optional<IntVec>& lower,
         const std::optional<IntVec>& upper) {
        return representative(table_handle(n, values, lower, upper));
      },
      py::arg("n"), py::arg("values"), py::arg("lower") = py::none(), py::arg("upper") = py::none(),
      "Dec-min element for a table indexed by subset bitmask; None stands for -inf.");

  m.def(
      "canonical",
      [](int n, const std::vector<std::optional<Int>>& values, const std::optional<IntVec>& lower,
         const std::optional<IntVec>& upper) {
        const BaseHandle b = table_handle(n, values, lower, upper);
        return decomposition_dict(canonical_from_decmin(b, representative(b)));
      },
      py::arg("n"), py::arg("values"), py::arg("lower") = py::none(), py::arg("upper") = py::none());

  m.def(
      "certify",
      [](int n, const std::vector<std::optional<Int>>& values, const IntVec& x) {
        const BaseHandle b = table_handle(n, values, std::nullopt, std::nullopt);
        const auto d = canonical_from_decmin(b, x);
        const GapReport g = duality_gap(b, x, d.pi_star);
        py::dict out;
        out["W"] = g.W;
        out["bound"] = g.bound;
        out["gap"] = g.gap;
        out["pi_star"] = d.pi_star;
        out["o1"] = g.o1;
        out["o2"] = g.o2;
        return out;
      },
      py::arg("n"), py::arg("values"), py::arg("m"));

  m.def(
      "orient",
      [](int n, const std::vector<std::vector<Int>>& edges, const std::optional<IntVec>& f,
         const std::optional<IntVec>& g, int k, bool cheapest) {
        const Graph gr = make_graph(n, edges);
        const NodeBounds b = make_bounds(n, f, g);
        if (k > 0) return orientation_dict(decmin_korient(gr, k, b));
        if (cheapest) return orientation_dict(cheapest_decmin_orientation_bounded(gr, b));
        return orientation_dict(decmin_orientation_bounded(gr, b));
      },
      py::arg("n"), py::arg("edges"), py::arg("f") = py::none(), py::arg("g") = py::none(),
      py::arg("k") = 0, py::arg("cheapest") = false,
      "Dec-min orientation; edges are (u, v[, ell[, cost_uv, cost_vu]]) with 0-based nodes.");

  m.def(
      "orient_capacitated",
      [](int n, const std::vector<std::vector<Int>>& edges) {
        const CapacitatedOrientation c = capacitated_decmin_orientation(make_graph(n, edges));
        py::dict out;
        out["z"] = c.z;
        out["indeg"] = c.indeg;
        return out;
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "semimatch",
      [](int ns, int nt, const std::vector<std::pair<int, int>>& edges) {
        SemiMatchingProblem p;
        p.ns = ns;
        p.nt = nt;
        for (const auto& [s, t] : edges) p.edges.push_back({s, t});
        const SemiMatching r = decmin_semimatching(p);
        py::dict out;
        out["count"] = r.count;
        out["degree_s"] = r.degree_s;
        return out;
      },
      py::arg("ns"), py::arg("nt"), py::arg("edges"));

  m.def(
      "basis_sum",
      [](const std::vector<std::string>& matroids) {
        std::vector<MatroidPtr> ms;
        for (const auto& s : matroids) ms.push_back(io::matroid_from_json(io::json::parse(s)));
        const BasisSumResult r = decmin_basis_sum(ms);
        py::dict out;
        out["bases"] = r.bases;
        out["sum"] = r.sum;
        return out;
      },
      py::arg("matroids"), "Matroids as JSON strings in the CLI matroid format.");
}
