#include "jordan/group/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PermFile parse_perm_file(std::string_view text) {
  PermFile out;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_degree) {
      if (!line.starts_with("degree"))
        throw ParseError(std::string(raw), 0, where + "expected 'degree n'");
      std::string_view num = trim(line.substr(6));
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc() || ptr != num.data() + num.size() || n == 0 || n > 65535)
        throw ParseError(std::string(raw), 6, where + "degree must be a positive integer");
      out.degree = n;
      have_degree = true;
    } else {
      try {
        out.generators.push_back(Permutation::from_cycles(line, out.degree));
      } catch (const ParseError& e) {
        throw ParseError(std::string(line), e.column(), where + e.what());
      }
    }
    if (end == text.size()) break;
  }
  if (!have_degree) throw ParseError(std::string(text.substr(0, 40)), 0, "missing 'degree n' line");
  if (out.generators.empty()) out.generators.push_back(Permutation::identity(out.degree));
  return out;
}

PermFile read_perm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_perm_file(buf.str());
}

GroupElement parse_element(const FiniteGroup& g, std::string_view text) {
  const GroupElement& e = g.element(g.identity());
  if (e.kind() == ElementKind::Permutation)
    return GroupElement(Permutation::from_cycles(text, e.as_permutation().degree()));

  const SemidirectPair& shape = e.as_pair();
  std::string_view s = trim(text);
  std::size_t bar = s.find('|');
  if (s.size() < 3 || s.front() != '[' || s.back() != ']' || bar == std::string_view::npos)
    throw ParseError(std::string(text), 0, "expected [v1,...,vr|cycles]");
  std::vector<int> v;
  std::string_view vec = s.substr(1, bar - 1);
  while (!vec.empty()) {
    std::size_t comma = vec.find(',');
    std::string_view tok = trim(vec.substr(0, comma));
    int x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(std::string(text), 1, "bad residue '" + std::string(tok) + "'");
    v.push_back(x);
    if (comma == std::string_view::npos) break;
    vec.remove_prefix(comma + 1);
  }
  if (v.size() != shape.action()->rank())
    throw ParseError(std::string(text), 1, "vector part has wrong rank");
  Permutation q = Permutation::from_cycles(s.substr(bar + 1, s.size() - bar - 2),
                                           shape.acting_part().degree());
  return GroupElement(SemidirectPair(std::move(v), std::move(q), shape.action()));
}

nlohmann::json certificate_to_json(const JordanCertificate& cert) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : cert.witness.generator_elements()) gens.push_back(g.to_string());
  return {
      {"order", cert.group_order},
      {"jordan_constant", cert.constant},
      {"witness", {{"order", cert.witness.order()},
                   {"index", cert.witness.index()},
                   {"generators", gens}}},
      {"checks", {{"witness_is_abelian", cert.checks.witness_is_abelian},
                  {"witness_is_normal", cert.checks.witness_is_normal},
                  {"index_equals_constant", cert.checks.index_equals_constant},
                  {"search_was_exhaustive", cert.checks.search_was_exhaustive}}},
  };
}

JordanCertificate certificate_from_json(const nlohmann::json& j, const GroupPtr& g) {
  try {
    std::vector<ElemIndex> gens;
    for (const auto& s : j.at("witness").at("generators")) {
      GroupElement x = parse_element(*g, s.get<std::string>());
      if (!g->contains(x)) throw ParseError(s.get<std::string>(), 0, "generator not in group");
      gens.push_back(g->index_of(x));
    }
    JordanCertificate cert{j.at("order").get<std::size_t>(),
                           j.at("jordan_constant").get<std::size_t>(),
                           Subgroup::generated_by(g, std::move(gens)),
                           {}};
    const auto& c = j.at("checks");
    cert.checks.witness_is_abelian = c.at("witness_is_abelian").get<bool>();
    cert.checks.witness_is_normal = c.at("witness_is_normal").get<bool>();
    cert.checks.index_equals_constant = c.at("index_equals_constant").get<bool>();
    cert.checks.search_was_exhaustive = c.at("search_was_exhaustive").get<bool>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(j.dump(), 0, std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace jordan
