#include "acdkit/group_spec.hpp"

#include <sstream>
#include <stdexcept>

#include "acdkit/constructions.hpp"

namespace acdkit {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("group spec: expected a non-negative integer for " + what + ", got '" + text + "'");
  return std::stoull(t);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

FiniteGroup parse_affine(const std::string& body, const std::string& full) {
  auto eq = body.find("gens=");
  if (eq == std::string::npos) throw std::invalid_argument("group spec: affine needs 'gens=' in '" + full + "'");
  auto head = split(body.substr(0, eq), ',');
  if (head.size() < 2) throw std::invalid_argument("group spec: affine needs p,a in '" + full + "'");
  std::uint64_t p = parse_uint(head[0], "p");
  auto a = static_cast<unsigned>(parse_uint(head[1], "a"));
  std::vector<Matrix> gens;
  std::string gtext = trim(body.substr(eq + 5));
  if (!gtext.empty()) {
    for (const auto& gm : split(gtext, '|')) {
      auto rows = split(gm, ';');
      if (rows.size() != a) throw std::invalid_argument("group spec: generator needs " + std::to_string(a) + " rows in '" + full + "'");
      Matrix m;
      for (const auto& r : rows) {
        std::istringstream rs(r);
        std::string tok;
        unsigned count = 0;
        while (rs >> tok) {
          m.push_back(static_cast<std::uint32_t>(parse_uint(tok, "matrix entry") % p));
          ++count;
        }
        if (count != a) throw std::invalid_argument("group spec: row needs " + std::to_string(a) + " entries in '" + full + "'");
      }
      gens.push_back(std::move(m));
    }
  }
  return make_affine(p, a, gens, AffineOptions{}, full);
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& raw) {
  std::string spec = trim(raw);
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group spec: missing ':' in '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string body = spec.substr(colon + 1);
  if (kind == "cyclic") return make_cyclic(parse_uint(body, "n"));
  if (kind == "elab") {
    auto caret = body.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("group spec: elab needs p^a in '" + spec + "'");
    return make_elementary_abelian(parse_uint(body.substr(0, caret), "p"), static_cast<unsigned>(parse_uint(body.substr(caret + 1), "a")));
  }
  if (kind == "frob") {
    auto parts = split(body, ',');
    if (parts.size() != 3) throw std::invalid_argument("group spec: frob needs p,a,h in '" + spec + "'");
    return frobenius_cyclic(parse_uint(parts[0], "p"), static_cast<unsigned>(parse_uint(parts[1], "a")), parse_uint(parts[2], "h"));
  }
  if (kind == "nonab") return nonabelian_f21(parse_uint(body, "p"));
  if (kind == "affine") return parse_affine(body, spec);
  if (kind == "prod") {
    auto star = body.find('*');
    if (star == std::string::npos) throw std::invalid_argument("group spec: prod needs A*B in '" + spec + "'");
    std::string left = body.substr(0, star);
    std::string right = body.substr(star + 1);
    if (right.find('*') != std::string::npos && right.rfind("prod:", 0) != 0) right = "prod:" + right;
    auto g = make_direct_product(parse_group_spec(left), parse_group_spec(right));
    return g.with_name(spec);
  }
  throw std::invalid_argument("group spec: unknown kind '" + kind + "' in '" + spec + "'");
}

}  // namespace acdkit
