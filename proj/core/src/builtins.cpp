#include "hopf_fusion/builtins.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  // (a*b)(x) = a(b(x))
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    r[x] = a[std::size_t(b[x])];
  return r;
}

CayleyTable table_from_generators(const std::vector<Perm>& gens) {
  std::set<Perm> elems;
  Perm id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i)
    id[i] = int(i);
  std::vector<Perm> frontier{id};
  elems.insert(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm c = compose(g, e);
        if (elems.insert(c).second)
          next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<Perm> list(elems.begin(), elems.end());
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < list.size(); ++i)
    index[list[i]] = int(i);
  CayleyTable t(list.size(), std::vector<int>(list.size()));
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = 0; b < list.size(); ++b)
      t[a][b] = index.at(compose(list[a], list[b]));
  return t;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"kC2",      "kC3",      "kS3",      "kD4",
                                          "dual-kC2", "dual-kC3", "dual-kS3", "dual-kD4"};
  return n;
}

} // namespace

CayleyTable cyclic_group(int n) {
  CayleyTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[std::size_t(a)][std::size_t(b)] = (a + b) % n;
  return t;
}

CayleyTable symmetric_group_s3() { return table_from_generators({{1, 0, 2}, {1, 2, 0}}); }

CayleyTable dihedral_group_d4() {
  // rotation and a reflection of the square's vertices 0..3
  return table_from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}});
}

CayleyTable builtin_group(const std::string& name) {
  std::string base = name.rfind("dual-", 0) == 0 ? name.substr(5) : name;
  if (base == "kC2")
    return cyclic_group(2);
  if (base == "kC3")
    return cyclic_group(3);
  if (base == "kS3")
    return symmetric_group_s3();
  if (base == "kD4")
    return dihedral_group_d4();
  throw InvalidInput("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() { return names(); }

BuiltinSpec parse_builtin_spec(const std::string& text) {
  auto at = text.find("@p=");
  if (at == std::string::npos)
    throw InvalidInput("builtin must look like NAME@p=P, got '" + text + "'");
  std::string name = text.substr(0, at);
  std::string digits = text.substr(at + 3);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 9)
    throw InvalidInput("bad characteristic in '" + text + "'");
  if (std::find(names().begin(), names().end(), name) == names().end())
    throw InvalidInput("unknown builtin '" + name + "'");
  return {name, std::uint32_t(std::stoul(digits))};
}

HopfAlgebra make_builtin(const std::string& name, std::uint32_t p) {
  FieldPtr field = Field::construct(p, 1);
  HopfAlgebra g = group_algebra(builtin_group(name), field);
  if (name.rfind("dual-", 0) == 0)
    return dual_hopf(g);
  return g;
}

} // namespace hopf_fusion
