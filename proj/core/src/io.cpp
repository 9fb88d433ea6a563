#include "netdual/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netdual/errors.hpp"

namespace netdual {

using nlohmann::json;

namespace {

Subset subset_from_indices(const json& list, int n, const char* what) {
  Subset s;
  for (const auto& v : list) {
    if (!v.is_number_integer())
      throw invalid_input(std::string(what) + " entries must be integers");
    int i = v.get<int>();
    if (i < 1 || i > n)
      throw invalid_input(std::string(what) + " index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(n));
    s = s.with(i - 1);
  }
  return s;
}

json indices_json(Subset s) {
  json out = json::array();
  for (int i : s.elements()) out.push_back(i + 1);
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace

LineArrangement arrangement_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw invalid_input("arrangement JSON needs an integer field \"n\"");
  int n = j["n"].get<int>();
  std::vector<Subset> points;
  if (j.contains("multiple_points")) {
    if (!j["multiple_points"].is_array())
      throw invalid_input("\"multiple_points\" must be an array of arrays");
    for (const auto& p : j["multiple_points"])
      points.push_back(subset_from_indices(p, n, "multiple point"));
  }
  return LineArrangement(n, std::move(points));
}

std::string arrangement_to_json(const LineArrangement& arr) {
  json out;
  out["n"] = arr.line_count();
  out["multiple_points"] = json::array();
  for (Subset p : arr.multiple_points()) out["multiple_points"].push_back(indices_json(p));
  return out.dump(2);
}

std::string catalog_entry_to_json(const CatalogEntry& entry) {
  json out;
  out["name"] = entry.name;
  out["description"] = entry.description;
  out["arrangement"] = json::parse(arrangement_to_json(entry.arrangement));
  if (entry.candidate) out["net"] = json::parse(net_candidate_to_json(*entry.candidate));
  if (!entry.coordinates.empty()) {
    out["coordinates"] = json::array();
    for (const RationalLine& l : entry.coordinates)
      out["coordinates"].push_back({l.a, l.b, l.c});
  }
  return out.dump(2);
}

std::vector<RationalLine> lines_from_text(const std::string& text) {
  std::vector<RationalLine> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(RationalLine::parse(line));
    } catch (const invalid_input& e) {
      throw invalid_input("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

SimpleGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  int vertices = 0;
  if (!(in >> vertices)) throw invalid_input("graph file must start with the vertex count");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) {
    if (u < 1 || v < 1 || u > vertices || v > vertices)
      throw invalid_input("edge endpoint out of range (vertices are 1-based)");
    edges.emplace_back(u - 1, v - 1);
  }
  if (!in.eof()) throw invalid_input("trailing junk in graph file");
  return SimpleGraph(vertices, std::move(edges));
}

NetCandidate net_candidate_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw invalid_input("net JSON needs \"blocks\": [[...], ...]");
  NetCandidate c;
  for (const auto& b : j["blocks"]) c.blocks.push_back(subset_from_indices(b, kMaxVars, "block"));
  if (j.contains("X"))
    for (const auto& p : j["X"]) c.points.push_back(subset_from_indices(p, kMaxVars, "X point"));
  return c;
}

std::string net_candidate_to_json(const NetCandidate& candidate) {
  json out;
  out["blocks"] = json::array();
  for (Subset b : candidate.blocks) out["blocks"].push_back(indices_json(b));
  out["X"] = json::array();
  for (Subset p : candidate.points) out["X"].push_back(indices_json(p));
  return out.dump(2);
}

std::string verdict_to_json(const NetVerdict& verdict, const GroundSet& ground) {
  json out;
  out["is_net"] = verdict.is_net;
  if (verdict.certificate) {
    const auto& c = *verdict.certificate;
    json cert;
    switch (c.kind) {
      case NetVerdict::Certificate::Kind::uncovered_pair:
        cert["kind"] = "uncovered-pair";
        cert["lines"] = indices_json(c.pair);
        break;
      case NetVerdict::Certificate::Kind::block_violation:
        cert["kind"] = "block-violation";
        cert["point"] = indices_json(c.point);
        cert["block"] = c.block + 1;
        break;
      case NetVerdict::Certificate::Kind::dual_degree_mismatch:
        cert["kind"] = "dual-degree-mismatch";
        cert["missing"] = json::array();
        for (Subset m : c.missing) cert["missing"].push_back(indices_json(m));
        cert["extra"] = json::array();
        for (Subset m : c.extra) cert["extra"].push_back(indices_json(m));
        break;
    }
    cert["text"] = c.describe(ground);
    out["certificate"] = cert;
  }
  return out.dump(2);
}

std::string betti_to_json(const BettiTable& table, bool multigraded) {
  json out;
  out["subject"] = table.subject() == Subject::ideal ? "ideal" : "quotient";
  out["nvars"] = table.nvars();
  out["pdim"] = table.pdim();
  out["reg"] = table.reg();
  out["entries"] = json::array();
  if (multigraded) {
    for (const auto& [key, rank] : table.multigraded_entries()) {
      Subset m(key.second);
      out["entries"].push_back(
          {{"i", key.first}, {"j", m.size()}, {"m", indices_json(m)}, {"rank", rank}});
    }
  } else {
    for (const auto& [key, rank] : table.graded_entries())
      out["entries"].push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  }
  return out.dump(2);
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  json out;
  out["n"] = ideal.ground().n;
  out["labels"] = ideal.ground().labels;
  out["generators"] = json::array();
  for (Monomial g : ideal.gens()) out["generators"].push_back(indices_json(g));
  return out.dump(2);
}

std::string polynomial_to_json(const IntPolynomial& p) {
  return json(p.coefficients()).dump();
}

std::string series_to_json(const HilbertSeries& s) {
  json out;
  out["numerator"] = s.numerator.coefficients();
  out["denominator_power"] = s.denominator_power;
  return out.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace netdual
