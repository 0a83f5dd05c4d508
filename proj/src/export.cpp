#include "uspan/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace uspan {

using nlohmann::json;

json graph_to_json(const SpannerGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"u", e.u}, {"v", e.v}, {"len", e.len}, {"seq", e.seq}});
  return {{"n", g.n}, {"s", g.s}, {"edges", edges}};
}

SpannerGraph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("s") || !j.contains("edges"))
    throw ValidationError("graph json needs n, s, edges");
  SpannerGraph g;
  g.n = j.at("n").get<int>();
  g.s = j.at("s").get<double>();
  if (g.n < 0 || !(g.s > 0.0)) throw ValidationError("graph json has bad n or s");
  for (const auto& e : j.at("edges")) {
    int u = e.at("u").get<int>();
    int v = e.at("v").get<int>();
    double len = e.at("len").get<double>();
    int seq = e.at("seq").get<int>();
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw ValidationError("edge id out of range");
    if (!(len > 0.0)) throw ValidationError("edge length must be positive");
    g.add_edge(u, v, len, seq);
  }
  return g;
}

json wspd_to_json(const Wspd& w) {
  json pairs = json::array();
  for (const auto& p : w.pairs)
    pairs.push_back({{"seq", p.seq},
                     {"a", p.center_a},
                     {"b", p.center_b},
                     {"r", p.radius},
                     {"A", p.members_a},
                     {"B", p.members_b}});
  return {{"s", w.s}, {"pairs", pairs}};
}

json hierarchy_to_json(const DiscreteCenterHierarchy& h) {
  json levels = json::array();
  for (const auto& lv : h.levels) levels.push_back(lv);
  json parents = json::array();
  for (int i = 1; i <= h.top_level; ++i) {
    json pm = json::object();
    for (int p : h.levels[i - 1]) pm[std::to_string(p)] = h.parents[i][p];
    parents.push_back(pm);
  }
  return {{"n", h.n},
          {"scale", h.scale},
          {"alpha", h.alpha},
          {"top_level", h.top_level},
          {"levels", levels},
          {"parents", parents}};
}

json event_to_json(const SimEvent& e) {
  json j{{"t", e.t}, {"kind", e.kind}};
  if (e.kind == "edge-built") {
    j["u"] = e.a;
    j["v"] = e.b;
    j["len"] = e.len;
    j["r"] = e.r;
    j["seq"] = e.seq;
  } else if (e.kind == "notify-batch") {
    j["seq"] = e.seq;
    j["ball_u"] = e.ids;
    j["ball_v"] = e.ids2;
  } else if (e.kind == "join" || e.kind == "recheck") {
    j["id"] = e.a;
  } else if (e.kind == "leave") {
    j["id"] = e.a;
    j["removed_seqs"] = e.ids;
    j["affected"] = e.ids2;
  }
  return j;
}

std::string graph_to_dot(const SpannerGraph& g) {
  std::ostringstream out;
  out << "graph spanner {\n  node [shape=point];\n";
  char buf[64];
  for (const auto& e : g.edges) {
    std::snprintf(buf, sizeof buf, "%.6g", e.len);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << buf << "\"];\n";
  }
  for (int i = 0; i < g.n; ++i) out << "  " << i << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_svg(const Metric& m, const SpannerGraph& g) {
  if (m.kind() != MetricKind::Euclidean || m.dim() != 2)
    throw ValidationError("svg export needs 2-d euclidean input");
  double xlo = m.point(0)[0], xhi = xlo, ylo = m.point(0)[1], yhi = ylo;
  for (int i = 1; i < m.size(); ++i) {
    auto p = m.point(i);
    xlo = std::min(xlo, p[0]);
    xhi = std::max(xhi, p[0]);
    ylo = std::min(ylo, p[1]);
    yhi = std::max(yhi, p[1]);
  }
  const double w = 800.0, margin = 20.0;
  double span = std::max({xhi - xlo, yhi - ylo, 1e-12});
  double k = (w - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - xlo) * k; };
  auto sy = [&](double y) { return w - margin - (y - ylo) * k; };

  std::ostringstream out;
  char buf[160];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  for (const auto& e : g.edges) {
    auto a = m.point(e.u), b = m.point(e.v);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                  "stroke=\"#3366aa\" stroke-width=\"0.7\"/>\n",
                  sx(a[0]), sy(a[1]), sx(b[0]), sy(b[1]));
    out << buf;
  }
  for (int i = 0; i < m.size(); ++i) {
    auto p = m.point(i);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"#222\"/>\n",
                  sx(p[0]), sy(p[1]));
    out << buf;
  }
  out << "</svg>\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << body;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

void write_jsonl_file(const std::string& path, const std::vector<SimEvent>& events) {
  std::ostringstream out;
  for (const auto& e : events) out << event_to_json(e).dump() << "\n";
  write_text_file(path, out.str());
}

}  // namespace uspan
