#include "decmin/io.hpp"

#include <sstream>

namespace decmin::io {

namespace {

Int value_of(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "-inf") return kNegInf;
    if (s == "inf" || s == "+inf") return kPosInf;
    throw Error("bad value string: " + s);
  }
  return v.get<Int>();
}

json value_to_json(Int v) {
  if (v == kNegInf) return "-inf";
  if (v == kPosInf) return "inf";
  return v;
}

IntVec vector_of(const json& j) {
  IntVec out;
  for (const auto& v : j) out.push_back(value_of(v));
  return out;
}

json masks_to_json(const std::vector<Mask>& ms) {
  json out = json::array();
  for (Mask m : ms) out.push_back(elements(m));
  return out;
}

std::vector<Mask> masks_from_json(const json& j) {
  std::vector<Mask> out;
  for (const auto& e : j) out.push_back(to_mask(e.get<std::vector<int>>()));
  return out;
}

// Lines with comments and blanks removed.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == 'c') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

int node_index(long v, int n) {
  if (v < 1 || v > n) throw Error("node " + std::to_string(v) + " out of range");
  return static_cast<int>(v - 1);
}

void read_header(std::istringstream& ls, const std::string& want, int& n, int& m) {
  std::string p, kind;
  ls >> p >> kind >> n >> m;
  if (!ls || p != "p" || kind != want) throw Error("expected header 'p " + want + " n m'");
  if (n < 1) throw Error("need at least one node");
}

}  // namespace

BaseHandle table_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  if (n < 1 || n > brute_ceiling().max_n) throw Error("table size out of range");
  std::vector<Int> values(std::size_t{1} << n, kNegInf);
  values[0] = 0;
  for (const auto& [key, v] : j.at("values").items()) {
    const unsigned long long mask = std::stoull(key);
    if (mask >= values.size()) throw Error("mask " + key + " out of range");
    values[mask] = value_of(v);
  }
  if (values[0] != 0) throw Error("the empty set must have value 0");
  if (!is_finite(values.back())) throw Error("the full set must have a finite value");
  BaseHandle h = BaseHandle::of(make_table(n, std::move(values)));
  if (j.contains("lower") || j.contains("upper")) {
    IntVec f = j.contains("lower") ? vector_of(j["lower"]) : IntVec(n, kNegInf);
    IntVec g = j.contains("upper") ? vector_of(j["upper"]) : IntVec(n, kPosInf);
    h = h.with_box(std::move(f), std::move(g));
  }
  return h;
}

json table_to_json(const SetFn& p) {
  check_subset_scan(p->size());
  json values = json::object();
  for (Mask x = 0; x < bit(p->size()); ++x) {
    const Int v = p->eval(x);
    if (v != kNegInf) values[std::to_string(x)] = value_to_json(v);
  }
  return {{"n", p->size()}, {"values", values}};
}

json decomposition_to_json(const CanonicalDecomposition& d) {
  return {{"n", d.n},
          {"chain", masks_to_json(d.chain)},
          {"partition", masks_to_json(d.partition)},
          {"betas", d.betas},
          {"r", d.r},
          {"delta_star", d.delta_star},
          {"pi_star", d.pi_star},
          {"value_fixed", masks_to_json(d.value_fixed)}};
}

CanonicalDecomposition decomposition_from_json(const json& j) {
  CanonicalDecomposition d;
  d.n = j.at("n").get<int>();
  d.chain = masks_from_json(j.at("chain"));
  d.partition = masks_from_json(j.at("partition"));
  d.betas = j.at("betas").get<std::vector<Int>>();
  d.r = j.at("r").get<std::vector<Int>>();
  d.delta_star = j.at("delta_star").get<IntVec>();
  d.pi_star = j.at("pi_star").get<IntVec>();
  d.value_fixed = masks_from_json(j.at("value_fixed"));
  return d;
}

GraphFile read_graph(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error("empty graph file");
  GraphFile out;
  int n = 0, m = 0;
  std::istringstream head(lines[0]);
  read_header(head, "orient", n, m);
  out.graph.n = n;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string tag;
    ls >> tag;
    if (tag == "e") {
      long u = 0, v = 0;
      if (!(ls >> u >> v)) throw Error("bad edge line: " + lines[i]);
      std::vector<Int> extra;
      Int x;
      while (ls >> x) extra.push_back(x);
      if (extra.size() == 3 || extra.size() > 4) throw Error("bad edge line: " + lines[i]);
      const Int mult = extra.size() > 0 ? extra[0] : 1;
      const Int ell = extra.size() > 1 ? extra[1] : 1;
      const Int cuv = extra.size() > 3 ? extra[2] : 0;
      const Int cvu = extra.size() > 3 ? extra[3] : 0;
      if (mult < 1) throw Error("edge multiplicity must be positive");
      for (Int k = 0; k < mult; ++k)
        out.graph.add_edge(node_index(u, n), node_index(v, n), ell, cuv, cvu);
    } else if (tag == "b") {
      long v = 0;
      std::string f, g;
      if (!(ls >> v >> f >> g)) throw Error("bad bound line: " + lines[i]);
      if (!out.bounds) out.bounds = NodeBounds::none(n);
      const int k = node_index(v, n);
      out.bounds->f[k] = f == "-" ? kNegInf : std::stoll(f);
      out.bounds->g[k] = g == "-" ? kPosInf : std::stoll(g);
    } else {
      throw Error("unknown line: " + lines[i]);
    }
  }
  (void)m;
  return out;
}

Digraph read_digraph(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error("empty digraph file");
  int n = 0, m = 0;
  std::istringstream head(lines[0]);
  read_header(head, "digraph", n, m);
  Digraph d;
  d.n = n;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string tag;
    long u = 0, v = 0;
    Int mult = 1;
    ls >> tag >> u >> v;
    if (tag != "a" || !ls) throw Error("bad arc line: " + lines[i]);
    ls >> mult;
    if (mult < 1) throw Error("arc multiplicity must be positive");
    d.add_arc(node_index(u, n), node_index(v, n), mult);
  }
  return d;
}

MegiddoProblem read_megiddo(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error("empty flow file");
  int n = 0, m = 0;
  std::istringstream head(lines[0]);
  read_header(head, "flow", n, m);
  MegiddoProblem p;
  p.n = n;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string tag;
    ls >> tag;
    if (tag == "a") {
      long u = 0, v = 0;
      Int cap = 1;
      if (!(ls >> u >> v)) throw Error("bad arc line: " + lines[i]);
      ls >> cap;
      p.arcs.push_back({node_index(u, n), node_index(v, n), cap, 0});
    } else if (tag == "S:" || tag == "T:") {
      auto& list = tag == "S:" ? p.sources : p.sinks;
      long v;
      while (ls >> v) list.push_back(node_index(v, n));
    } else if (tag == "M:") {
      Int amount;
      if (!(ls >> amount)) throw Error("bad amount line: " + lines[i]);
      p.amount = amount;
    } else {
      throw Error("unknown line: " + lines[i]);
    }
  }
  return p;
}

MatroidPtr matroid_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "uniform") return uniform_matroid(j.at("n").get<int>(), j.at("rank").get<int>());
  if (type == "partition")
    return partition_matroid(j.at("blocks").get<std::vector<int>>(),
                             j.at("caps").get<std::vector<int>>());
  if (type == "graphic")
    return graphic_matroid(j.at("nodes").get<int>(),
                           j.at("edges").get<std::vector<std::pair<int, int>>>());
  if (type == "bases") {
    std::vector<Mask> bases;
    for (const auto& b : j.at("bases")) bases.push_back(to_mask(b.get<std::vector<int>>()));
    return explicit_bases(j.at("n").get<int>(), std::move(bases));
  }
  throw Error("unknown matroid type: " + type);
}

SemiMatchingProblem semimatching_from_json(const json& j) {
  SemiMatchingProblem p;
  p.ns = j.at("S").get<int>();
  p.nt = j.at("T").get<int>();
  for (const auto& e : j.at("edges")) {
    BipartiteEdge be;
    if (e.is_array()) {
      be.s = e.at(0).get<int>();
      be.t = e.at(1).get<int>();
    } else {
      be.s = e.at("s").get<int>();
      be.t = e.at("t").get<int>();
      be.cap = e.value("cap", Int{1});
      be.cost = e.value("cost", Int{0});
    }
    p.edges.push_back(be);
  }
  auto opt = [&](const char* key) -> std::optional<IntVec> {
    if (!j.contains(key)) return std::nullopt;
    return vector_of(j[key]);
  };
  p.m_t = opt("m_t");
  p.f_t = opt("f_t");
  p.g_t = opt("g_t");
  p.f_s = opt("f_s");
  p.g_s = opt("g_s");
  if (j.contains("gamma")) p.gamma = j["gamma"].get<Int>();
  return p;
}

IntVec parse_vector(const std::string& csv) {
  IntVec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    const Int v = std::stoll(item, &used);
    if (item.find_first_not_of(" ", used) != std::string::npos)
      throw Error("bad integer: " + item);
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_nodes(const std::string& csv) {
  std::vector<int> out;
  for (Int v : parse_vector(csv)) {
    if (v < 1) throw Error("nodes are 1-based");
    out.push_back(static_cast<int>(v - 1));
  }
  return out;
}

}  // namespace decmin::io
