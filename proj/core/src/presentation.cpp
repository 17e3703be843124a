#include "hopf_fusion/presentation.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;)
    out.push_back(tok);
  return out;
}

class Parser {
public:
  explicit Parser(std::istream& in) : in_(in) {}

  HopfAlgebra run() {
    std::vector<std::string> header;
    if (!next(header))
      fail("empty presentation");
    parse_header(header);

    HopfData data;
    data.field = field_;
    data.dim = dim_;
    data.unit = zero_vector(*field_, std::size_t(dim_));
    data.counit = zero_vector(*field_, std::size_t(dim_));
    data.antipode = Matrix(field_, std::size_t(dim_), std::size_t(dim_));

    std::vector<std::string> toks;
    std::string section;
    std::map<std::string, bool> seen;
    CayleyTable cayley;
    bool group = false, dual = false;
    while (next(toks)) {
      if (toks.size() == 1 && is_section(toks[0])) {
        section = toks[0];
        if (seen[section])
          fail("section " + section + " appears twice");
        seen[section] = true;
        if (section == "GROUP_ALGEBRA" || section == "DUAL_GROUP_ALGEBRA") {
          group = true;
          dual = section == "DUAL_GROUP_ALGEBRA";
        }
        continue;
      }
      if (section.empty())
        fail("data before the first section");
      if (section == "MULT" || section == "COMULT") {
        expect(toks, 4);
        StructureEntry e{index(toks[0]), index(toks[1]), index(toks[2]), element(toks[3])};
        (section == "MULT" ? data.mult : data.comult).push_back(e);
      } else if (section == "UNIT" || section == "COUNIT") {
        expect(toks, 2);
        (section == "UNIT" ? data.unit : data.counit)[std::size_t(index(toks[0]))] = element(toks[1]);
      } else if (section == "ANTIPODE") {
        expect(toks, 3);
        data.antipode(std::size_t(index(toks[1])), std::size_t(index(toks[0]))) = element(toks[2]);
      } else {
        expect(toks, std::size_t(dim_));
        std::vector<int> row;
        for (const auto& t : toks)
          row.push_back(index(t));
        cayley.push_back(std::move(row));
      }
    }

    bool explicit_sections = seen["MULT"] || seen["COMULT"] || seen["UNIT"] || seen["COUNIT"] || seen["ANTIPODE"];
    if (group) {
      if (explicit_sections || (seen["GROUP_ALGEBRA"] && seen["DUAL_GROUP_ALGEBRA"]))
        fail("a group stanza cannot be combined with other sections");
      if (cayley.size() != std::size_t(dim_))
        fail("Cayley table has " + std::to_string(cayley.size()) + " rows, expected " + std::to_string(dim_));
      HopfAlgebra g = group_algebra(cayley, field_);
      return dual ? dual_hopf(g) : g;
    }
    for (const char* s : {"MULT", "COMULT", "UNIT", "COUNIT", "ANTIPODE"})
      if (!seen[s])
        fail(std::string("missing section ") + s);
    return HopfAlgebra(data);
  }

private:
  using CayleyTable = std::vector<std::vector<int>>;

  static bool is_section(const std::string& s) {
    for (const char* name : {"MULT", "COMULT", "UNIT", "COUNIT", "ANTIPODE", "GROUP_ALGEBRA", "DUAL_GROUP_ALGEBRA"})
      if (s == name)
        return true;
    return false;
  }

  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      toks = split_ws(line);
      if (!toks.empty() && toks[0][0] != '#')
        return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("presentation line " + std::to_string(line_no_) + ": " + msg);
  }

  void expect(const std::vector<std::string>& toks, std::size_t count) const {
    if (toks.size() != count)
      fail("expected " + std::to_string(count) + " fields, got " + std::to_string(toks.size()));
  }

  long long integer(const std::string& s, const std::string& what) const {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail("bad " + what + " '" + s + "'");
    return v;
  }

  int index(const std::string& s) const {
    long long v = integer(s, "index");
    if (v < 0 || v >= dim_)
      fail("index " + s + " out of range [0, " + std::to_string(dim_) + ")");
    return int(v);
  }

  FieldElement element(const std::string& s) const {
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      long long c = integer(part, "coefficient");
      if (c < 0 || c >= field_->characteristic())
        fail("coefficient " + part + " is not a residue mod " + std::to_string(field_->characteristic()));
      coeffs.push_back(std::uint32_t(c));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
    if (coeffs.size() > field_->degree())
      fail("element '" + s + "' has more than " + std::to_string(field_->degree()) + " coefficients");
    return field_->from_coeffs(coeffs);
  }

  void parse_header(const std::vector<std::string>& toks) {
    if (toks.size() < 4 || toks[0] != "hopf-sc" || toks[1] != "v1")
      fail("header must be 'hopf-sc v1 p=<p> k=<k> dim=<d>'");
    std::map<std::string, long long> kv;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      auto eq = toks[i].find('=');
      if (eq == std::string::npos)
        fail("bad header field '" + toks[i] + "'");
      std::string key = toks[i].substr(0, eq);
      if (key != "p" && key != "k" && key != "dim")
        fail("unknown header field '" + key + "'");
      if (kv.count(key))
        fail("header field '" + key + "' repeated");
      kv[key] = integer(toks[i].substr(eq + 1), key);
    }
    if (!kv.count("p") || !kv.count("dim"))
      fail("header needs p= and dim=");
    long long p = kv["p"], k = kv.count("k") ? kv["k"] : 1, d = kv["dim"];
    if (p < 2 || p > (1 << 22) || !is_prime(std::uint64_t(p)))
      fail("p=" + std::to_string(p) + " is not a supported prime");
    if (k < 1 || k > 22)
      fail("k=" + std::to_string(k) + " out of range");
    if (d < 1 || d > kMaxPresentationDim)
      fail("dim=" + std::to_string(d) + " out of range [1, " + std::to_string(kMaxPresentationDim) + "]");
    field_ = Field::construct(std::uint32_t(p), unsigned(k));
    dim_ = int(d);
  }

  std::istream& in_;
  int line_no_ = 0;
  FieldPtr field_;
  int dim_ = 0;
};

} // namespace

HopfAlgebra parse_presentation(std::istream& in) { return Parser(in).run(); }

HopfAlgebra parse_presentation_string(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

HopfAlgebra load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open '" + path + "'");
  return parse_presentation(in);
}

std::string write_presentation(const HopfAlgebra& h) {
  const Field& f = *h.field();
  std::ostringstream out;
  out << "hopf-sc v1 p=" << f.characteristic() << " k=" << f.degree() << " dim=" << h.dim() << "\nMULT\n";
  for (int a = 0; a < h.dim(); ++a)
    for (int b = 0; b < h.dim(); ++b)
      for (const auto& t : h.mult_terms(a, b))
        out << a << ' ' << b << ' ' << t.index << ' ' << t.coeff.to_string() << '\n';
  out << "COMULT\n";
  for (int a = 0; a < h.dim(); ++a)
    for (const auto& t : h.comult_terms(a))
      out << a << ' ' << t.left << ' ' << t.right << ' ' << t.coeff.to_string() << '\n';
  for (const auto& [name, vec] : {std::pair{"UNIT", &h.unit()}, std::pair{"COUNIT", &h.counit_vector()}}) {
    out << name << '\n';
    for (int a = 0; a < h.dim(); ++a)
      if (!(*vec)[std::size_t(a)].is_zero())
        out << a << ' ' << (*vec)[std::size_t(a)].to_string() << '\n';
  }
  out << "ANTIPODE\n";
  for (int a = 0; a < h.dim(); ++a)
    for (int b = 0; b < h.dim(); ++b) {
      FieldElement x = h.antipode()(std::size_t(b), std::size_t(a));
      if (!x.is_zero())
        out << a << ' ' << b << ' ' << x.to_string() << '\n';
    }
  return out.str();
}

} // namespace hopf_fusion
