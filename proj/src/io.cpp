#include "faithdim/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace faithdim {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw input_error("cannot parse integer '" + v.get<std::string>() + "'");
    }
  }
  throw input_error("coefficients must be integers or decimal strings");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ZLieAlgebra algebra_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("dim") ||
      !j["dim"].is_number_unsigned())
    throw input_error("algebra file needs a nonnegative \"dim\"");
  const std::size_t d = j["dim"].get<std::size_t>();
  if (d > 64) throw input_error("dimension too large (max 64)");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& b : j["basis"]) names.push_back(b.get<std::string>());
    if (names.size() != d)
      throw input_error("basis name count does not match dim");
  }
  ZLieAlgebra g(d, names);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (j.contains("brackets")) {
    for (const auto& entry : j["brackets"]) {
      if (!entry.contains("i") || !entry.contains("j") ||
          !entry.contains("result"))
        throw input_error("each bracket needs \"i\", \"j\" and \"result\"");
      const std::size_t i = entry["i"].get<std::size_t>();
      const std::size_t jj = entry["j"].get<std::size_t>();
      if (i < 1 || jj < 1 || i > d || jj > d || i == jj)
        throw input_error("bracket indices must be distinct and in [1, dim]");
      auto key = std::minmax(i, jj);
      if (!seen.insert(key).second)
        throw input_error("duplicate bracket for pair (" + std::to_string(i) +
                          "," + std::to_string(jj) + ")");
      std::vector<Int> result(d, 0);
      for (const auto& [k, v] : entry["result"].items()) {
        std::size_t idx = 0;
        try {
          idx = std::stoul(k);
        } catch (const std::exception&) {
          throw input_error("bracket result key '" + k + "' is not an index");
        }
        if (idx < 1 || idx > d)
          throw input_error("bracket result index out of range");
        result[idx - 1] = int_from_json(v);
      }
      g.set_bracket(i - 1, jj - 1, std::move(result));
    }
  }
  return g;
}

ZLieAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(read_file(path));
}

std::string algebra_to_json(const ZLieAlgebra& g) {
  json j;
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      auto b = g.basis_bracket(i, k);
      json result = json::object();
      for (std::size_t l = 0; l < g.dim(); ++l)
        if (b[l] != 0) result[std::to_string(l + 1)] = b[l].str();
      if (!result.empty())
        brackets.push_back(
            {{"i", i + 1}, {"j", k + 1}, {"result", std::move(result)}});
    }
  j["brackets"] = std::move(brackets);
  return j.dump(2);
}

Poset poset_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("n"))
    throw input_error("poset file needs \"n\"");
  unsigned n = j["n"].get<unsigned>();
  std::vector<std::pair<unsigned, unsigned>> rel;
  if (j.contains("relations"))
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2)
        throw input_error("each relation is a pair [i, j]");
      rel.emplace_back(r[0].get<unsigned>(), r[1].get<unsigned>());
    }
  return Poset(n, rel);
}

Poset load_poset(const std::string& path) {
  return poset_from_json(read_file(path));
}

std::string result_to_json(const FaithfulDimResult& r, std::uint32_t p) {
  json j;
  j["schema"] = 1;
  j["p"] = p;
  j["f"] = r.f;
  j["q"] = r.q;
  j["l1"] = r.l1;
  j["l2"] = r.l2;
  j["m"] = r.m;
  j["value"] = r.value;
  j["signature"] = r.signature;
  j["witness"] = r.witness;
  j["mode"] = r.exact ? "exact" : "upper-bound";
  return j.dump();
}

std::string result_to_text(const FaithfulDimResult& r, std::uint32_t p) {
  std::ostringstream os;
  os << "faithful dimension of exp(g (x) F_q), q = " << p << "^" << r.f
     << " = " << r.q << "\n";
  os << "  value     " << r.value << (r.exact ? "" : "  (upper bound)")
     << "\n";
  os << "  signature (";
  for (std::size_t i = 0; i < r.signature.size(); ++i)
    os << (i ? " " : "") << r.signature[i];
  os << ")  l1 " << r.l1 << "  l2 " << r.l2 << "  m " << r.m << "\n";
  if (!r.witness.empty()) {
    os << "  witness rows (element encodings)\n";
    for (const auto& row : r.witness) {
      os << "   ";
      for (auto e : row) os << " " << e;
      os << "\n";
    }
  }
  return os.str();
}

std::string result_to_csv(const FaithfulDimResult& r, std::uint32_t p) {
  std::ostringstream os;
  os << "prime,f,q,value,signature,mode,matched_case\n";
  os << p << ',' << r.f << ',' << r.q << ',' << r.value << ',';
  for (std::size_t i = 0; i < r.signature.size(); ++i)
    os << (i ? " " : "") << r.signature[i];
  os << ',' << (r.exact ? "exact" : "upper-bound") << ",\n";
  return os.str();
}

}  // namespace faithdim
