#include "gk/output.hpp"

#include <sstream>

#include <json.hpp>

#include "gk/refdata.hpp"

namespace gk::output {

using cocliques::CompactGraph;
using cocliques::CocliqueReport;
using cocliques::Vertex;
using nlohmann::json;

namespace {

json vertex_json(const Vertex& v) {
  json j;
  j["label"] = v.label();
  switch (v.kind) {
    case Vertex::Kind::Char:
      j["kind"] = "characteristic";
      j["prime"] = v.prime.str();
      break;
    case Vertex::Kind::Named:
      j["kind"] = "prime";
      j["prime"] = v.prime.str();
      if (v.index) j["host"] = v.index;
      break;
    case Vertex::Kind::Class:
      j["kind"] = "class";
      j["class"] = std::string(1, v.cls);
      j["index"] = v.index;
      break;
  }
  return j;
}

std::vector<std::string> class_primes(const GroupSpec& spec, unsigned index, char cls) {
  std::vector<Integer> primes;
  if (cls == 'S')
    primes = numth::suzuki_ree_class(spec.family == Family::TwoB2   ? numth::SRFamily::Sz2B2
                                     : spec.family == Family::TwoG2 ? numth::SRFamily::Ree2G2
                                                                    : numth::SRFamily::Ree2F4,
                                     spec.sr_tower(), index);
  else
    primes = numth::primitive_primes(index, spec.q->q);
  std::vector<std::string> out;
  for (const auto& r : primes) out.push_back(r.str());
  return out;
}

json edges_json(const CompactGraph& g) {
  json edges = json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (g.adj[i][j] == cocliques::Adjacent) edges.push_back({i, j});
  return edges;
}

json core_graph_json(const CompactGraph& g, bool explicit_primes) {
  json j;
  j["group"] = g.spec.display();
  json verts = json::array();
  for (const auto& v : g.vertices) {
    json vj = vertex_json(v);
    if (explicit_primes && v.kind == Vertex::Kind::Class)
      vj["primes"] = class_primes(g.spec, v.index, v.cls);
    verts.push_back(std::move(vj));
  }
  j["vertices"] = std::move(verts);
  j["edges"] = edges_json(g);
  json classes = json::array();
  if (g.spec.is_lie()) {
    auto part = partition(g.spec);
    for (const auto& c : part.classes) {
      json cj;
      cj["index"] = c.index;
      cj["kind"] = std::string(1, part.class_kind);
      cj["witness"] = c.witness.str();
      cj["nonempty"] = c.nonempty;
      classes.push_back(std::move(cj));
    }
  }
  j["classes"] = std::move(classes);
  json unresolved = json::array();
  for (auto [a, b] : g.unresolved_pairs()) unresolved.push_back({a, b});
  j["unresolved"] = std::move(unresolved);
  return j;
}

}  // namespace

std::string graph_json(const CompactGraph& g, bool explicit_primes) {
  return core_graph_json(g, explicit_primes).dump(2) + "\n";
}

std::string graph_dot(const CompactGraph& g, bool explicit_primes) {
  std::ostringstream os;
  os << "graph \"" << g.spec.display() << "\" {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    std::string label = g.vertices[i].label();
    if (explicit_primes && g.vertices[i].kind == Vertex::Kind::Class) {
      label += " =";
      for (const auto& r : class_primes(g.spec, g.vertices[i].index, g.vertices[i].cls))
        label += " " + r;
    }
    os << "  v" << i << " [label=\"" << label << "\"];\n";
  }
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.adj[i][j] == cocliques::Adjacent) os << "  v" << i << " -- v" << j << ";\n";
      else if (g.adj[i][j] == cocliques::Unresolved)
        os << "  v" << i << " -- v" << j << " [style=dotted, label=\"unspecified\"];\n";
    }
  os << "}\n";
  return os.str();
}

std::string graph_text(const CompactGraph& g, bool explicit_primes) {
  std::ostringstream os;
  os << g.spec.display() << ": " << g.vertices.size() << " vertices\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  " << g.vertices[i].label();
    if (explicit_primes && g.vertices[i].kind == Vertex::Kind::Class) {
      os << " = {";
      auto ps = class_primes(g.spec, g.vertices[i].index, g.vertices[i].cls);
      for (size_t k = 0; k < ps.size(); ++k) os << (k ? "," : "") << ps[k];
      os << "}";
    }
    os << " --";
    bool any = false;
    for (size_t j = 0; j < g.vertices.size(); ++j)
      if (j != i && g.adj[i][j] == cocliques::Adjacent) {
        os << " " << g.vertices[j].label();
        any = true;
      }
    if (!any) os << " (isolated)";
    os << "\n";
  }
  return os.str();
}

CompactGraph read_graph_json(const std::string& doc) {
  json j = json::parse(doc);
  CompactGraph g;
  g.spec = parse_spec(j.at("group").get<std::string>() == "2F4(2)'"
                          ? "Tits"
                          : j.at("group").get<std::string>());
  for (const auto& vj : j.at("vertices")) {
    Vertex v;
    std::string kind = vj.at("kind").get<std::string>();
    if (kind == "characteristic") {
      v.kind = Vertex::Kind::Char;
      v.prime = Integer(vj.at("prime").get<std::string>());
    } else if (kind == "prime") {
      v.kind = Vertex::Kind::Named;
      v.prime = Integer(vj.at("prime").get<std::string>());
      if (vj.contains("host")) v.index = vj.at("host").get<unsigned>();
    } else {
      v.kind = Vertex::Kind::Class;
      v.cls = vj.at("class").get<std::string>().at(0);
      v.index = vj.at("index").get<unsigned>();
    }
    g.vertices.push_back(std::move(v));
    g.caps.push_back(-1);
  }
  size_t n = g.vertices.size();
  g.adj.assign(n, std::vector<std::uint8_t>(n, cocliques::NonAdjacent));
  for (const auto& e : j.at("edges")) {
    size_t a = e.at(0).get<size_t>(), b = e.at(1).get<size_t>();
    g.adj[a][b] = g.adj[b][a] = cocliques::Adjacent;
  }
  for (const auto& e : j.at("unresolved")) {
    size_t a = e.at(0).get<size_t>(), b = e.at(1).get<size_t>();
    g.adj[a][b] = g.adj[b][a] = cocliques::Unresolved;
  }
  return g;
}

namespace {

json theta_json(const CocliqueReport& rep) {
  json t;
  t["p_forced"] = rep.p_forced;
  json named = json::array();
  for (int v : rep.forced_named) named.push_back(rep.graph.vertices[v].label());
  t["named"] = std::move(named);
  json slots = json::array();
  for (const auto& s : rep.slots) {
    json sj;
    sj["class"] = s.index;
    json atoms = json::array();
    for (int a : s.atoms) atoms.push_back(rep.graph.vertices[a].label());
    sj["atoms"] = std::move(atoms);
    json excl = json::array();
    for (const auto& e : s.excluded) excl.push_back(e.str());
    sj["excluded"] = std::move(excl);
    slots.push_back(std::move(sj));
  }
  t["slots"] = std::move(slots);
  return t;
}

}  // namespace

std::string report_json(const CocliqueReport& rep, bool all) {
  json j = core_graph_json(rep.graph, false);
  j["t"] = rep.t;
  j["theta"] = theta_json(rep);
  json tp = json::array();
  for (const auto& r : rep.theta_prime) {
    json opt = json::array();
    for (int v : r) opt.push_back(rep.graph.vertices[v].label());
    tp.push_back(std::move(opt));
  }
  j["theta_prime"] = std::move(tp);
  if (all) {
    json mcs = json::array();
    for (const auto& C : rep.max_cocliques) {
      json c = json::array();
      for (int v : C) c.push_back(rep.graph.vertices[v].label());
      mcs.push_back(std::move(c));
    }
    j["max_cocliques"] = std::move(mcs);
  }
  return j.dump(2) + "\n";
}

std::string report_text(const CocliqueReport& rep, bool all) {
  std::ostringstream os;
  os << rep.spec.display() << ": t = " << rep.t << "\n";
  os << "theta: ";
  if (rep.p_forced) os << "p ";
  for (int v : rep.forced_named) os << rep.graph.vertices[v].label() << " ";
  for (const auto& s : rep.slots) {
    os << "[one of";
    for (int a : s.atoms) os << " " << rep.graph.vertices[a].label();
    os << "] ";
  }
  os << "\n";
  os << "theta': ";
  if (rep.theta_prime.empty()) os << "(empty)";
  for (const auto& r : rep.theta_prime) {
    os << "{";
    for (size_t i = 0; i < r.size(); ++i)
      os << (i ? "," : "") << rep.graph.vertices[r[i]].label();
    os << "} ";
  }
  os << "\n";
  if (all) {
    os << "maximum cocliques (" << rep.max_cocliques.size() << "):\n";
    for (const auto& C : rep.max_cocliques) {
      os << "  {";
      for (size_t i = 0; i < C.size(); ++i)
        os << (i ? "," : "") << rep.graph.vertices[C[i]].label();
      os << "}\n";
    }
  }
  return os.str();
}

}  // namespace gk::output
