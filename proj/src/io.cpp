#include "liealg/io.hpp"

#include <openssl/evp.h>

#include <set>

namespace liealg::io {
namespace {

[[noreturn]] void fail(const std::string& message, const std::string& context = {}) {
  throw Error(ErrorCode::Parse, message, context);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_value(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Scalar scalar_value(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a scalar string");
  return Scalar::parse(j.get<std::string>());
}

Json::array_t array_value(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j.get<Json::array_t>();
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail("malformed JSON", e.what());
  }
}

Matrix matrix_value(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  auto flat = array_value(j, what);
  // Either row-major flat or nested rows.
  if (flat.size() == rows && rows > 0 && flat.front().is_array()) {
    Json::array_t joined;
    for (const auto& r : flat) {
      auto row = array_value(r, what);
      if (row.size() != cols) fail(std::string(what) + " has a row of the wrong length");
      joined.insert(joined.end(), row.begin(), row.end());
    }
    flat = std::move(joined);
  }
  if (flat.size() != rows * cols) fail(std::string(what) + " has the wrong number of entries");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_value(flat[r * cols + c], what);
  return m;
}

}  // namespace

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) fail("algebra file must be a JSON object");
  const std::size_t n = index_value(member(j, "dim"), "dim");
  LieAlgebra l(n);
  if (j.contains("labels")) {
    auto labels = array_value(j.at("labels"), "labels");
    if (labels.size() != n) fail("labels must have dim entries");
    std::vector<std::string> names;
    for (const auto& s : labels) {
      if (!s.is_string()) fail("labels must be strings");
      names.push_back(s.get<std::string>());
    }
    l.set_labels(std::move(names));
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : array_value(member(j, "brackets"), "brackets")) {
    const std::size_t i = index_value(member(entry, "i"), "i");
    const std::size_t jj = index_value(member(entry, "j"), "j");
    const std::string where = "(" + std::to_string(i) + "," + std::to_string(jj) + ")";
    if (i >= jj) fail("bracket requires i < j", where);
    if (jj >= n) fail("bracket index out of range", where);
    if (!seen.insert({i, jj}).second) fail("duplicate bracket entry", where);
    Vector out(n);
    std::set<std::size_t> ks;
    for (const auto& term : array_value(member(entry, "out"), "out")) {
      const std::size_t k = index_value(member(term, "k"), "k");
      if (k >= n) fail("output index out of range", where);
      if (!ks.insert(k).second) fail("duplicate output index", where);
      out[k] = scalar_value(member(term, "c"), "c");
    }
    l.set_bracket(i, jj, out);
  }
  return l;
}

Json algebra_to_json(const LieAlgebra& l) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vector v = l.bracket(i, j);
      Json out = Json::array();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out.push_back({{"k", k}, {"c", v[k].to_string()}});
      if (!out.empty()) brackets.push_back({{"i", i}, {"j", j}, {"out", std::move(out)}});
    }
  return {{"dim", l.dim()}, {"labels", l.labels()}, {"brackets", std::move(brackets)}};
}

LieAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_text(text)); }

StructureData parse_structure(std::string_view text) { return structure_from_json(parse_text(text)); }

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row_vector(r)));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}};
}

Json series_to_json(const SeriesReport& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(matrix_to_json(t.basis()));
  Json out = {{"kind", std::string(to_string(s.kind))},
              {"dims", s.dims},
              {"stabilized_at", s.stabilized_at},
              {"terms", std::move(terms)}};
  out["split_at"] = s.split_at ? Json(*s.split_at) : Json(nullptr);
  return out;
}

Json witness_to_json(const DirectSumWitness& w) {
  Json ideals = Json::array(), components = Json::array();
  for (const auto& i : w.ideals) ideals.push_back(subspace_to_json(i));
  for (const auto& c : w.components) components.push_back(algebra_to_json(c));
  return {{"ideals", std::move(ideals)}, {"components", std::move(components)}, {"assembly", matrix_to_json(w.assembly)}};
}

Json verdict_to_json(const DecomposabilityVerdict& v) {
  Json out = {{"status", std::string(to_string(v.status))}, {"reason", v.reason}, {"centroid_dim", v.centroid_dim}};
  out["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  return out;
}

Json search_to_json(const SearchReport& r) {
  Json flagged = Json::array(), unknown = Json::array();
  for (const auto& d : r.flagged) flagged.push_back(structure_to_json(d));
  for (const auto& d : r.unknown_instances) unknown.push_back(structure_to_json(d));
  return {{"n1", r.n1},
          {"n2", r.n2},
          {"samples", r.samples},
          {"seed", r.seed},
          {"decomposable", r.decomposable},
          {"indecomposable", r.indecomposable},
          {"unknown", r.unknown},
          {"skipped", r.skipped},
          {"rejected_candidates", r.rejected_candidates},
          {"flagged", std::move(flagged)},
          {"unknown_instances", std::move(unknown)}};
}

StructureData structure_from_json(const Json& j) {
  if (!j.is_object()) fail("structure file must be a JSON object");
  const Json& fam = member(j, "family");
  if (!fam.is_string()) fail("family must be a string");
  StructureData d;
  const std::string name = fam.get<std::string>();
  if (name == "AbelianLeft") {
    d.family = StructureFamily::AbelianLeft;
  } else if (name == "HeisenbergLeft") {
    d.family = StructureFamily::HeisenbergLeft;
  } else {
    fail("unknown family", name);
  }
  const bool heis = d.family == StructureFamily::HeisenbergLeft;
  if (j.contains("left_dim")) {
    d.left_dim = index_value(j.at("left_dim"), "left_dim");
  } else if (heis && j.contains("p")) {
    d.left_dim = 2 * index_value(j.at("p"), "p") + 1;
  } else if (!heis && j.contains("n1")) {
    d.left_dim = index_value(j.at("n1"), "n1");
  } else {
    fail("missing left dimension");
  }
  if (j.contains("right_dim")) {
    d.right_dim = index_value(j.at("right_dim"), "right_dim");
  } else if (heis && j.contains("n")) {
    d.right_dim = index_value(j.at("n"), "n");
  } else if (!heis && j.contains("n2")) {
    d.right_dim = index_value(j.at("n2"), "n2");
  } else {
    fail("missing right dimension");
  }
  if (heis && d.left_dim % 2 == 0) fail("Heisenberg left dimension must be odd");
  auto ds = array_value(member(j, "D"), "D");
  if (ds.size() != d.left_dim) fail("D must have one matrix per left basis vector");
  for (const auto& m : ds) d.d.push_back(matrix_value(m, d.right_dim, d.right_dim, "D"));
  if (j.contains("b")) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : array_value(j.at("b"), "b")) {
      const std::size_t a = index_value(member(e, "a"), "a");
      const std::size_t c = index_value(member(e, "c"), "c");
      const std::string where = "(" + std::to_string(a) + "," + std::to_string(c) + ")";
      if (a >= c || c >= d.left_dim) fail("b entry requires a < c < left_dim", where);
      if (!seen.insert({a, c}).second) fail("duplicate b entry", where);
      auto v = array_value(member(e, "v"), "v");
      if (v.size() != d.right_dim) fail("b vector has the wrong length", where);
      Vector vec;
      for (const auto& s : v) vec.push_back(scalar_value(s, "v"));
      d.set_b(a, c, vec);
    }
  }
  return d;
}

Json structure_to_json(const StructureData& d) {
  Json ds = Json::array();
  for (const auto& m : d.d) {
    Json flat = Json::array();
    for (const auto& s : m.entries()) flat.push_back(s.to_string());
    ds.push_back(std::move(flat));
  }
  Json bs = Json::array();
  for (const auto& [key, v] : d.b)
    if (!is_zero(v)) bs.push_back({{"a", key.first}, {"c", key.second}, {"v", vector_to_json(v)}});
  Json out = {{"family", std::string(to_string(d.family))},
              {"left_dim", d.left_dim},
              {"right_dim", d.right_dim},
              {"D", std::move(ds)},
              {"b", std::move(bs)}};
  if (d.family == StructureFamily::HeisenbergLeft) out["p"] = d.heisenberg_p();
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InternalContradiction, "digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out.push_back(hex[digest[k] >> 4]);
    out.push_back(hex[digest[k] & 15]);
  }
  return out;
}

}  // namespace liealg::io
