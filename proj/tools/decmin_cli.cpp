#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "decmin/applications.hpp"
#include "decmin/canonical.hpp"
#include "decmin/engine.hpp"
#include "decmin/io.hpp"
#include "decmin/matroid.hpp"
#include "decmin/orientation.hpp"
#include "decmin/random.hpp"

using namespace decmin;
using io::json;

namespace {

constexpr int kExitInfeasible = 2;
constexpr int kExitMismatch = 3;

struct VerifyFailure : Error {
  using Error::Error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return json::parse(in);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x + 1);
  return out;
}

std::string text_of(const json& v) {
  if (v.is_array()) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += v[i].is_array() ? " | " : " ";
      out += text_of(v[i]);
    }
    return out;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const json& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : out.items()) std::cout << k << ": " << text_of(v) << "\n";
}

// ---- brute-force cross-checks ----------------------------------------------

IntVec brute_decmin(const std::vector<IntVec>& points) {
  if (points.empty()) throw Error("empty set");
  IntVec best = points[0];
  for (const auto& p : points)
    if (dec_compare(p, best) == Order::Smaller) best = p;
  return best;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw VerifyFailure("verification failed: " + what);
}

struct OrientRequest {
  NodeBounds bounds;
  std::vector<int> t;
  int k = 0;
};

// Dec-min feasible in-degree vector over all 2^m orientations (after the
// in-degree of T is minimized when T is given).
std::optional<IntVec> brute_orientation(const Graph& g, const OrientRequest& s) {
  if (g.m() > 20) return std::nullopt;
  std::optional<IntVec> best;
  Int best_t = kPosInf;
  for (Mask x = 0; x < bit(g.m()); ++x) {
    std::vector<char> fwd(g.m());
    for (int e = 0; e < g.m(); ++e) fwd[e] = has(x, e);
    const Orientation o = make_orientation(g, fwd);
    bool ok = true;
    for (int v = 0; v < g.n; ++v)
      ok = ok && o.indeg[v] >= s.bounds.f[v] && o.indeg[v] <= s.bounds.g[v];
    if (!ok || !is_k_edge_connected(g, o, s.k)) continue;
    Int tin = 0;
    for (int v : s.t) tin += o.indeg[v];
    if (!best || tin < best_t ||
        (tin == best_t && dec_compare(o.indeg, *best) == Order::Smaller)) {
      best = o.indeg;
      best_t = tin;
    }
  }
  return best;
}

// ---- subcommands -------------------------------------------------------------

IntVec representative(const BaseHandle& h) {
  const IntVec m = strongly_poly_decmin(h);
  IntVec c(h.n);
  std::iota(c.begin(), c.end(), 0);
  return cheapest_decmin(h, c, m);
}

BaseHandle load_table(const std::string& path, const std::string& lower,
                      const std::string& upper) {
  BaseHandle h = io::table_from_json(read_json(path));
  if (!lower.empty() || !upper.empty()) {
    IntVec f = lower.empty() ? IntVec(h.n, kNegInf) : io::parse_vector(lower);
    IntVec g = upper.empty() ? IntVec(h.n, kPosInf) : io::parse_vector(upper);
    h = h.with_box(std::move(f), std::move(g));
  }
  return h;
}

json run_decmin(const BaseHandle& h, bool verify) {
  const IntVec m = representative(h);
  const auto dc = canonical_from_decmin(h, m);
  if (verify && h.n <= brute_ceiling().max_n) {
    const auto pts = enumerate_integral_points(h).points;
    expect(value_equivalent(brute_decmin(pts), m), "dec-min value differs from brute force");
  }
  return {{"m", m}, {"betas", dc.betas}};
}

json run_canonical(const BaseHandle& h, bool verify) {
  const IntVec m = representative(h);
  const auto dc = canonical_from_decmin(h, m);
  if (verify) {
    for (const auto& p : enumerate_integral_points(h).points)
      if (value_equivalent(p, m) && is_decmin(h, p).decmin)
        expect(canonical_from_decmin(h, p) == dc, "decomposition depends on the element");
  }
  json out = io::decomposition_to_json(dc);
  out["m"] = m;
  return out;
}

json run_certify(const BaseHandle& h, const std::string& given, bool verify) {
  const IntVec dm = strongly_poly_decmin(h);
  const auto dc = canonical_from_decmin(h, dm);
  const IntVec m = given.empty() ? dm : io::parse_vector(given);
  if (static_cast<int>(m.size()) != h.n) throw Error("vector length mismatch");
  if (!is_member(h, m)) throw Infeasible("vector is not a member", {});
  const GapReport g = duality_gap(h, m, dc.pi_star);
  if (verify) {
    Int best = kPosInf;
    for (const auto& p : enumerate_integral_points(h).points)
      best = std::min(best, measures(p).square_sum);
    expect(best == g.bound, "square-sum minimum differs from the dual bound");
  }
  return {{"W", g.W},       {"bound", g.bound}, {"gap", g.gap},
          {"pi_star", dc.pi_star}, {"o1", g.o1}, {"o2", g.o2}};
}

json orientation_json(const Graph& g, const Orientation& o) {
  json arcs = json::array();
  for (int e = 0; e < g.m(); ++e) {
    const auto& ed = g.edges[e];
    arcs.push_back(o.forward[e] ? json{ed.u + 1, ed.v + 1} : json{ed.v + 1, ed.u + 1});
  }
  return {{"indeg", o.indeg}, {"arcs", arcs}, {"cost", o.cost}};
}

struct OrientFlags {
  std::string graph, tset;
  int k = 0;
  bool cheapest = false, capacitated = false, inout = false, verify = false;
};

json run_orient(const OrientFlags& f) {
  auto in = open(f.graph);
  const io::GraphFile gf = io::read_graph(in);
  const Graph& g = gf.graph;
  const NodeBounds b = gf.bounds.value_or(NodeBounds::none(g.n));
  if (f.capacitated) {
    const auto co = capacitated_decmin_orientation(g);
    if (f.verify) {
      const Orientation ex = decmin_orientation(g.expanded());
      expect(value_equivalent(ex.indeg, co.indeg), "capacitated result differs from expansion");
    }
    return {{"indeg", co.indeg}, {"z", co.z}};
  }
  if (f.inout) {
    const auto o = inout_decmin_orientation(g);
    if (!o) return {{"exists", false}};
    json out = orientation_json(g, *o);
    out["exists"] = true;
    return out;
  }
  OrientRequest req{b, f.tset.empty() ? std::vector<int>{} : io::parse_nodes(f.tset), f.k};
  for (int v : req.t)
    if (v >= g.n) throw Error("T node out of range");
  Orientation o;
  if (!req.t.empty()) o = decmin_orientation_minT(g, b, req.t);
  else if (f.k > 0) o = decmin_korient(g, f.k, b);
  else if (f.cheapest) o = cheapest_decmin_orientation_bounded(g, b);
  else o = decmin_orientation_bounded(g, b);
  if (f.verify) {
    if (const auto best = brute_orientation(g, req))
      expect(value_equivalent(*best, o.indeg), "orientation differs from brute force");
  }
  return orientation_json(g, o);
}

json run_semimatch(const std::string& path, bool verify) {
  const auto p = io::semimatching_from_json(read_json(path));
  const auto r = decmin_semimatching(p);
  if (verify && p.ns <= 12) {
    const BaseHandle h = semimatching_base(p);
    const auto pts = enumerate_integral_points(h).points;
    expect(value_equivalent(brute_decmin(pts), r.degree_s), "degrees differ from brute force");
  }
  json f = json::array();
  for (size_t e = 0; e < p.edges.size(); ++e)
    if (r.count[e] > 0) f.push_back({p.edges[e].s, p.edges[e].t, r.count[e]});
  return {{"degrees", r.degree_s}, {"F", f}, {"cost", r.cost}};
}

json run_matroid_sum(const std::string& path, int copies, const std::string& lower,
                     const std::string& upper, bool verify) {
  const json j = read_json(path);
  std::vector<MatroidPtr> ms;
  if (j.contains("matroids")) {
    for (const auto& m : j["matroids"]) ms.push_back(io::matroid_from_json(m));
  } else {
    for (int i = 0; i < copies; ++i) ms.push_back(io::matroid_from_json(j));
  }
  if (j.contains("blocks")) {
    if (ms.size() != 1) throw Error("partition mode takes one matroid");
    const auto blocks = j["blocks"].get<std::vector<int>>();
    const int nb = blocks.empty() ? 0 : *std::max_element(blocks.begin(), blocks.end()) + 1;
    const auto r = decmin_partition_intersection(ms[0], blocks, nb);
    return {{"vector", r.vector}, {"basis", r.basis}};
  }
  std::optional<NodeBounds> box;
  const int n = ms.at(0)->size();
  if (!lower.empty() || !upper.empty())
    box = NodeBounds{lower.empty() ? IntVec(n, kNegInf) : io::parse_vector(lower),
                     upper.empty() ? IntVec(n, kPosInf) : io::parse_vector(upper)};
  const auto r = decmin_basis_sum(ms, box);
  if (verify && ms.size() <= 4 && n <= 10) {
    std::vector<std::vector<Mask>> all;
    for (const auto& m : ms) all.push_back(enumerate_bases(*m));
    std::vector<IntVec> sums;
    std::function<void(size_t, IntVec)> rec = [&](size_t i, IntVec acc) {
      if (i == all.size()) {
        bool ok = true;
        for (int s = 0; s < n && box; ++s)
          ok = ok && acc[s] >= box->f[s] && acc[s] <= box->g[s];
        if (ok) sums.push_back(acc);
        return;
      }
      for (Mask b : all[i]) {
        IntVec next = acc;
        for (int s : elements(b)) ++next[s];
        rec(i + 1, next);
      }
    };
    rec(0, IntVec(n, 0));
    expect(value_equivalent(brute_decmin(sums), r.sum), "basis sum differs from brute force");
  }
  return {{"sum", r.sum}, {"bases", r.bases}};
}

json run_megiddo(const std::string& path, std::optional<Int> amount, bool verify) {
  auto in = open(path);
  MegiddoProblem p = io::read_megiddo(in);
  if (amount) p.amount = amount;
  const auto r = megiddo_discrete(p);
  if (verify && p.sources.size() <= 10) {
    const auto pts = enumerate_integral_points(megiddo_base(p, r.amount)).points;
    expect(value_equivalent(brute_decmin(pts), r.out), "out-flows differ from brute force");
  }
  return {{"out", r.out}, {"flow", r.flow}, {"amount", r.amount}};
}

json run_rootvec(const std::string& path, Int k, bool verify) {
  auto in = open(path);
  const Digraph d = io::read_digraph(in);
  const IntVec m = decmin_root_vector(d, k);
  if (verify) {
    std::vector<IntVec> pts;
    IntVec cur(d.n, 0);
    std::function<void(int, Int)> rec = [&](int v, Int left) {
      if (v == d.n - 1) {
        cur[v] = left;
        if (is_root_vector(d, k, cur)) pts.push_back(cur);
        return;
      }
      for (Int x = 0; x <= left; ++x) {
        cur[v] = x;
        rec(v + 1, left - x);
      }
    };
    rec(0, k);
    expect(value_equivalent(brute_decmin(pts), m), "root vector differs from brute force");
  }
  return {{"m", m}};
}

json run_verify(std::uint64_t seed, int count) {
  gen::Rng rng(seed);
  int tables = 0, graphs = 0;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const BaseHandle h = BaseHandle::of(gen::supermodular_table(rng, n));
    const IntVec m = strongly_poly_decmin(h);
    const auto pts = enumerate_integral_points(h).points;
    expect(value_equivalent(brute_decmin(pts), m), "table instance " + std::to_string(i));
    ++tables;

    const int gn = 2 + static_cast<int>(rng() % 4);
    const int gm = gn - 1 + static_cast<int>(rng() % (11 - gn));
    const Graph g = gen::multigraph(rng, gn, gm, true);
    const Orientation o = decmin_orientation(g);
    const auto best = brute_orientation(g, {NodeBounds::none(g.n), {}, 0});
    expect(best && value_equivalent(*best, o.indeg), "graph instance " + std::to_string(i));
    ++graphs;
  }
  return {{"seed", seed}, {"tables", tables}, {"graphs", graphs}, {"mismatches", 0}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decreasingly minimal elements of M-convex sets"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool verify = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--verify", verify, "Cross-check against brute force");

  std::string table, lower, upper, given;
  auto* decmin = app.add_subcommand("decmin", "Dec-min element of a table base-polyhedron");
  auto* canonical = app.add_subcommand("canonical", "Canonical chain, partition and values");
  auto* certify = app.add_subcommand("certify", "Square-sum certificate for a member");
  for (auto* sc : {decmin, canonical, certify}) {
    sc->add_option("--table", table, "Set-function table (JSON)")->required();
    sc->add_option("--lower", lower, "Lower box bounds, comma separated");
    sc->add_option("--upper", upper, "Upper box bounds, comma separated");
  }
  certify->add_option("--m", given, "Member to certify (default: a dec-min element)");

  OrientFlags of;
  auto* orient = app.add_subcommand("orient", "Dec-min orientation of a graph");
  orient->add_option("--graph", of.graph, "Graph file")->required();
  orient->add_option("--T", of.tset, "Nodes whose total in-degree is minimized");
  orient->add_option("--k", of.k, "Required edge-connectivity of the orientation");
  orient->add_flag("--cheapest", of.cheapest, "Cheapest dec-min orientation");
  orient->add_flag("--capacitated", of.capacitated, "Edges carry capacities");
  orient->add_flag("--inout", of.inout, "Dec-min in- and out-degrees simultaneously");

  std::string instance;
  auto* semimatch = app.add_subcommand("semimatch", "Dec-min semi-matching");
  semimatch->add_option("--instance", instance, "Bipartite instance (JSON)")->required();

  int copies = 1;
  auto* msum = app.add_subcommand("matroid-sum", "Dec-min sum of bases");
  msum->add_option("--matroids", instance, "Matroid file (JSON)")->required();
  msum->add_option("--copies", copies, "Copies of a single matroid");
  msum->add_option("--lower", lower, "Lower bounds on the sum");
  msum->add_option("--upper", upper, "Upper bounds on the sum");

  std::optional<Int> amount;
  auto* megiddo = app.add_subcommand("megiddo", "Flow with inc-max source out-flows");
  megiddo->add_option("--instance", instance, "Flow file")->required();
  megiddo->add_option("--amount", amount, "Flow amount (default: maximum)");

  Int k = 1;
  auto* rootvec = app.add_subcommand("rootvec", "Dec-min root vector of arborescence packings");
  rootvec->add_option("--digraph", instance, "Digraph file")->required();
  rootvec->add_option("--k", k, "Number of arborescences")->capture_default_str();

  std::uint64_t seed = 0;
  int count = 100;
  auto* verify_cmd = app.add_subcommand("verify", "Random corpus against brute force");
  verify_cmd->add_option("--seed", seed, "Random seed")->required();
  verify_cmd->add_option("--count", count, "Instances per family")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  of.verify = verify;
  try {
    json out;
    if (decmin->parsed()) out = run_decmin(load_table(table, lower, upper), verify);
    else if (canonical->parsed()) out = run_canonical(load_table(table, lower, upper), verify);
    else if (certify->parsed()) out = run_certify(load_table(table, lower, upper), given, verify);
    else if (orient->parsed()) out = run_orient(of);
    else if (semimatch->parsed()) out = run_semimatch(instance, verify);
    else if (msum->parsed()) out = run_matroid_sum(instance, copies, lower, upper, verify);
    else if (megiddo->parsed()) out = run_megiddo(instance, amount, verify);
    else if (rootvec->parsed()) out = run_rootvec(instance, k, verify);
    else if (verify_cmd->parsed()) out = run_verify(seed, count);
    emit(out, format);
    return 0;
  } catch (const Infeasible& e) {
    emit({{"infeasible", e.what()}, {"witness", one_based(e.witness)}}, format);
    return kExitInfeasible;
  } catch (const VerifyFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
