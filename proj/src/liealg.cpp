#include "halfder/liealg.hpp"

#include "halfder/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace halfder {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<BracketEntry> brackets)
    : name_(std::move(name)), names_(std::move(basis_names)) {
  const std::size_t d = names_.size();
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw ValidationError("duplicate basis name '" + n + "'");

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (auto& b : brackets) {
    if (b.i >= d || b.j >= d) throw ValidationError("bracket index out of range");
    if (b.i >= b.j) throw ValidationError("bracket pairs must satisfy i < j");
    if (!pairs.insert({b.i, b.j}).second) throw ValidationError("bracket pair listed twice");
    for (auto it = b.terms.begin(); it != b.terms.end();) {
      if (it->first >= d) throw ValidationError("bracket term index out of range");
      it = it->second.is_zero() ? b.terms.erase(it) : std::next(it);
    }
    if (!b.terms.empty()) brackets_.push_back(std::move(b));
  }
  std::sort(brackets_.begin(), brackets_.end(),
            [](const BracketEntry& x, const BracketEntry& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });

  table_.assign(d * d, Vector(d));
  for (const auto& b : brackets_)
    for (const auto& [k, c] : b.terms) {
      table_[b.i * d + b.j][k] = c;
      table_[b.j * d + b.i][k] = -c;
    }
}

Vector LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  const std::size_t d = dim();
  if (u.size() != d || v.size() != d) throw std::invalid_argument("bracket: element dimension mismatch");
  Vector out(d);
  for (const auto& b : brackets_) {
    // [u,v] picks up (u_i v_j - u_j v_i) [e_i, e_j] for each stored pair.
    Rational w = u[b.i] * v[b.j] - u[b.j] * v[b.i];
    if (w.is_zero()) continue;
    for (const auto& [k, c] : b.terms) out[k].add_mul(w, c);
  }
  return out;
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& basis_name) const {
  auto it = std::find(names_.begin(), names_.end(), basis_name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vector LieAlgebra::unit(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

// ---------------------------------------------------------------------------

StructureBuilder::StructureBuilder(std::vector<std::string> basis_names) : names_(std::move(basis_names)) {}

StructureBuilder& StructureBuilder::add(std::size_t a, std::size_t b, std::size_t k, const Rational& coeff) {
  if (a >= dim() || b >= dim() || k >= dim()) throw std::out_of_range("StructureBuilder: index out of range");
  if (a == b) {
    if (!coeff.is_zero()) throw ValidationError("[e_a, e_a] must vanish");
    return *this;
  }
  if (a < b)
    entries_[{a, b}][k] += coeff;
  else
    entries_[{b, a}][k] -= coeff;
  return *this;
}

LieAlgebra StructureBuilder::build(std::string name) const {
  std::vector<BracketEntry> out;
  for (const auto& [ij, terms] : entries_) out.push_back({ij.first, ij.second, terms});
  return LieAlgebra(std::move(name), names_, std::move(out));
}

// ---------------------------------------------------------------------------

std::optional<JacobiViolation> check_jacobi(const LieAlgebra& a) {
  const std::size_t d = a.dim();
  auto ad_apply = [&](const Vector& u, std::size_t k) {
    // [u, e_k]
    Vector out(d);
    for (std::size_t m = 0; m < d; ++m)
      if (!u[m].is_zero()) axpy(u[m], a.basis_bracket(m, k), out);
    return out;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vector r = ad_apply(a.basis_bracket(i, j), k);
        const Vector t2 = ad_apply(a.basis_bracket(j, k), i);
        const Vector t3 = ad_apply(a.basis_bracket(k, i), j);
        axpy(1, t2, r);
        axpy(1, t3, r);
        if (!is_zero(r)) return JacobiViolation{{i, j, k}, std::move(r)};
      }
  return std::nullopt;
}

LieAlgebra restrict_to(const LieAlgebra& a, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> pos(a.dim(), static_cast<std::size_t>(-1));
  std::vector<std::string> names;
  for (std::size_t r = 0; r < indices.size(); ++r) {
    pos.at(indices[r]) = r;
    names.push_back(a.basis_names()[indices[r]]);
  }
  StructureBuilder sb(names);
  for (const auto& b : a.brackets()) {
    const bool inside = pos[b.i] != static_cast<std::size_t>(-1) && pos[b.j] != static_cast<std::size_t>(-1);
    if (!inside) continue;
    for (const auto& [k, c] : b.terms) {
      if (pos[k] == static_cast<std::size_t>(-1))
        throw ValidationError("span of selected basis elements is not a subalgebra");
      sb.add(pos[b.i], pos[b.j], pos[k], c);
    }
  }
  return sb.build(a.name() + "|restricted");
}

LieAlgebra permuted(const LieAlgebra& a, const std::vector<std::size_t>& perm) {
  if (perm.size() != a.dim()) throw std::invalid_argument("permuted: permutation length mismatch");
  std::vector<std::size_t> inv(a.dim(), static_cast<std::size_t>(-1));
  std::vector<std::string> names;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    inv.at(perm[r]) = r;
    names.push_back(a.basis_names()[perm[r]]);
  }
  StructureBuilder sb(names);
  for (const auto& b : a.brackets())
    for (const auto& [k, c] : b.terms) sb.add(inv[b.i], inv[b.j], inv[k], c);
  return sb.build(a.name());
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const LieAlgebra& a) {
  nlohmann::json brackets = nlohmann::json::array();
  for (const auto& b : a.brackets()) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [k, c] : b.terms) terms[std::to_string(k)] = c.str();
    brackets.push_back({{"i", b.i}, {"j", b.j}, {"terms", terms}});
  }
  return {{"name", a.name()}, {"dim", a.dim()}, {"basis", a.basis_names()}, {"brackets", brackets}};
}

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

std::size_t read_index(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer()) parse_fail(field, "expected an integer");
  const auto x = v.get<long long>();
  if (x < 0) parse_fail(field, "negative index");
  return static_cast<std::size_t>(x);
}

}  // namespace

LieAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) parse_fail("<root>", "expected an object");
  for (const char* key : {"name", "dim", "basis", "brackets"})
    if (!doc.contains(key)) parse_fail(key, "missing");
  if (!doc["name"].is_string()) parse_fail("name", "expected a string");
  const std::size_t d = read_index(doc["dim"], "dim");
  if (!doc["basis"].is_array()) parse_fail("basis", "expected an array");
  std::vector<std::string> names;
  for (std::size_t r = 0; r < doc["basis"].size(); ++r) {
    if (!doc["basis"][r].is_string()) parse_fail("basis[" + std::to_string(r) + "]", "expected a string");
    names.push_back(doc["basis"][r].get<std::string>());
  }
  if (names.size() != d) parse_fail("basis", "length " + std::to_string(names.size()) + " differs from dim " + std::to_string(d));
  if (!doc["brackets"].is_array()) parse_fail("brackets", "expected an array");

  std::vector<BracketEntry> entries;
  for (std::size_t r = 0; r < doc["brackets"].size(); ++r) {
    const auto& e = doc["brackets"][r];
    const std::string where = "brackets[" + std::to_string(r) + "]";
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("terms"))
      parse_fail(where, "expected an object with i, j, terms");
    BracketEntry b;
    b.i = read_index(e["i"], where + ".i");
    b.j = read_index(e["j"], where + ".j");
    if (b.i >= d) parse_fail(where + ".i", "index " + std::to_string(b.i) + " >= dim");
    if (b.j >= d) parse_fail(where + ".j", "index " + std::to_string(b.j) + " >= dim");
    if (b.i >= b.j) parse_fail(where, "requires i < j");
    if (!e["terms"].is_object()) parse_fail(where + ".terms", "expected an object");
    for (const auto& [key, val] : e["terms"].items()) {
      const std::string tf = where + ".terms." + key;
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        const long long kk = std::stoll(key, &used);
        if (used != key.size() || kk < 0) throw std::invalid_argument(key);
        k = static_cast<std::size_t>(kk);
      } catch (const std::exception&) {
        parse_fail(tf, "term key must be a non-negative integer");
      }
      if (k >= d) parse_fail(tf, "index " + std::to_string(k) + " >= dim");
      if (!val.is_string()) parse_fail(tf, "coefficient must be a \"p/q\" string");
      try {
        b.terms[k] = Rational::parse(val.get<std::string>());
      } catch (const std::invalid_argument& ex) {
        parse_fail(tf, ex.what());
      }
    }
    entries.push_back(std::move(b));
  }
  LieAlgebra a;
  try {
    a = LieAlgebra(doc["name"].get<std::string>(), std::move(names), std::move(entries));
  } catch (const ValidationError& ex) {
    throw ParseError(ex.what());
  }
  if (auto v = check_jacobi(a)) {
    std::ostringstream os;
    os << "Jacobi identity fails on (" << v->triple[0] << ", " << v->triple[1] << ", " << v->triple[2]
       << "), residual " << format_element(a, v->residual);
    throw ValidationError(os.str());
  }
  return a;
}

std::string serialize(const LieAlgebra& a) { return to_json(a).dump(2) + "\n"; }

LieAlgebra deserialize(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    const auto upto = std::min<std::size_t>(ex.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError("line " + std::to_string(line) + ": " + ex.what());
  }
  return algebra_from_json(doc);
}

LieAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

void save_algebra(const LieAlgebra& a, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serialize(a);
}

std::string format_element(const LieAlgebra& a, std::span<const Rational> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational c = v[i];
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    if (c != Rational(1)) out += c.str() + "*";
    out += a.basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace halfder
