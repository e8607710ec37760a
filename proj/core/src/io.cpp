#include "biclique/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "biclique/errors.hpp"

namespace biclique::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int small_int(const json& j, const char* field) {
  if (!j.is_number_integer()) throw InvalidInput(std::string("expected an integer for ") + field);
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw InvalidInput(std::string(field) + " is out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  const std::string s(trim(text));
  const std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<long>(digits_from), s.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidInput("not an integer: '" + s + "'");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

json integer_to_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidInput("expected an integer or a decimal string, got " + j.dump());
}

json poly_to_json(const IntPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a JSON array, got " + j.dump());
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPoly(std::move(coeffs));
}

json matchings_to_json(const MatchingNumbers& m) {
  json out = json::array();
  for (const auto& c : m.counts) out.push_back(integer_to_json(c));
  return out;
}

json params_to_json(const ThreeCliqueParams& p) {
  json out = json::array();
  for (const auto& v : p.values) out.push_back(integer_to_json(v));
  return out;
}

json spec_to_json(const BicliqueSpec& spec) {
  json edges = json::array();
  for (const auto& [l, r] : spec.complement_edges()) edges.push_back({l, r});
  return {{"j", spec.j()}, {"k", spec.k()}, {"complement_edges", std::move(edges)}};
}

BicliqueSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("biclique spec must be a JSON object");
  if (j.contains("params")) {
    const json& p = j.at("params");
    if (!p.is_array() || p.size() != 6) throw InvalidInput("\"params\" must hold six integers");
    ThreeCliqueParams params;
    for (std::size_t i = 0; i < 6; ++i) params.values[i] = integer_from_json(p[i]);
    return from_params(params);
  }
  if (!j.contains("j") || !j.contains("k")) {
    throw InvalidInput("biclique spec needs \"j\" and \"k\" (or \"params\")");
  }
  std::vector<ComplementEdge> edges;
  if (j.contains("complement_edges")) {
    const json& list = j.at("complement_edges");
    if (!list.is_array()) throw InvalidInput("\"complement_edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("complement edge must be [l, r]");
      edges.emplace_back(small_int(e[0], "edge endpoint"), small_int(e[1], "edge endpoint"));
    }
  }
  return BicliqueSpec(small_int(j.at("j"), "j"), small_int(j.at("k"), "k"), std::move(edges));
}

BicliqueSpec spec_from_edge_list(std::istream& in) {
  std::string line;
  bool have_header = false;
  int j = 0, k = 0;
  std::vector<ComplementEdge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    long first = 0, second = 0;
    std::string extra;
    if (!(fields >> first >> second) || (fields >> extra)) {
      throw InvalidInput("edge list line " + std::to_string(line_no) + ": expected two integers");
    }
    if (first < std::numeric_limits<int>::min() || first > std::numeric_limits<int>::max() ||
        second < std::numeric_limits<int>::min() || second > std::numeric_limits<int>::max()) {
      throw InvalidInput("edge list line " + std::to_string(line_no) + ": value out of range");
    }
    if (!have_header) {
      j = static_cast<int>(first);
      k = static_cast<int>(second);
      have_header = true;
    } else {
      edges.emplace_back(static_cast<int>(first), static_cast<int>(second));
    }
  }
  if (!have_header) throw InvalidInput("edge list is empty: expected a \"j k\" header line");
  return BicliqueSpec(j, k, std::move(edges));
}

BicliqueSpec read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json parsed;
    try {
      parsed = json::parse(body);
    } catch (const json::parse_error& e) {
      throw InvalidInput(path.string() + ": " + e.what());
    }
    return spec_from_json(parsed);
  }
  std::istringstream lines(text);
  return spec_from_edge_list(lines);
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_integer(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ThreeCliqueParams parse_params(std::string_view text) {
  const std::vector<Integer> values = parse_integer_list(text);
  if (values.size() != 6) {
    throw InvalidInput("expected six comma-separated counts a,b,c,d,e,f, got " +
                       std::to_string(values.size()));
  }
  ThreeCliqueParams p;
  std::copy(values.begin(), values.end(), p.values.begin());
  return p;
}

json relation_to_json(const RelationReport& report) {
  return {{"kind", to_string(report.kind)},
          {"shift", report.kind == RelationKind::kNone ? json(nullptr) : integer_to_json(report.shift)},
          {"verified", report.verified}};
}

json alphan_to_json(const AlphaNResult& r) {
  return {{"params", params_to_json(r.params)},
          {"k", integer_to_json(r.k())},
          {"n", integer_to_json(r.n)},
          {"n0", integer_to_json(r.n0)},
          {"N", integer_to_json(r.N)},
          {"case", r.state.case_id},
          {"t", integer_to_json(r.state.t)},
          {"i", integer_to_json(r.state.i)},
          {"reduced", poly_to_json(r.reduced)},
          {"q", poly_to_json(r.target)},
          {"g", poly_to_json(r.g)},
          {"verified", r.verified}};
}

}  // namespace biclique::io
