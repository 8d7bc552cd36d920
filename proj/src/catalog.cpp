#include "liealg/catalog.hpp"

#include <functional>

namespace liealg::catalog {

namespace {

// Builder for 1-based bracket tables as written in the examples: rule(i, j, {{k, c}, ...})
// sets [x_i, x_j] = sum c x_k.
struct Table {
  LieAlgebra algebra;

  explicit Table(std::size_t n, std::vector<std::string> labels = {}) : algebra(n, std::move(labels)) {}

  Table& rule(std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, Scalar>> terms) {
    Vector v(algebra.dim());
    for (const auto& [k, c] : terms) v.at(k - 1) += c;
    algebra.set_bracket(i - 1, j - 1, v);
    return *this;
  }
};

const Scalar& require(const ParamMap& params, const std::string& label, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) {
    throw Error(ErrorCode::MissingParameter, label + " requires parameter '" + name + "'", name);
  }
  return it->second;
}

Scalar require_nonzero(const ParamMap& params, const std::string& label, const std::string& name) {
  const Scalar& s = require(params, label, name);
  if (s.is_zero()) throw Error(ErrorCode::InvalidParameter, label + ": parameter '" + name + "' must be nonzero", name);
  return s;
}

std::size_t require_count(const ParamMap& params, const std::string& label, const std::string& name,
                          std::size_t minimum) {
  const Scalar& s = require(params, label, name);
  if (!s.is_real() || s.re().get_den() != 1 || s.re() < static_cast<long>(minimum) || s.re() > 64) {
    throw Error(ErrorCode::InvalidParameter,
                label + ": parameter '" + name + "' must be an integer in [" + std::to_string(minimum) + ", 64]",
                name);
  }
  return static_cast<std::size_t>(s.re().get_num().get_ui());
}

using Maker = std::function<LieAlgebra(const ParamMap&)>;

const std::map<std::string, Maker>& makers() {
  static const std::map<std::string, Maker> table = {
      {"A", [](const ParamMap& p) { return abelian(require_count(p, "A", "n", 0)); }},
      {"H", [](const ParamMap& p) { return heisenberg(require_count(p, "H", "p", 1)); }},
      {"canonical_HpA1",
       [](const ParamMap& p) { return canonical_hp_a1(require_count(p, "canonical_HpA1", "p", 1)); }},
      {"F4", [](const ParamMap&) { return Table(4).rule(1, 2, {{3, 1}}).rule(1, 3, {{4, 1}}).algebra; }},
      {"s2_1", [](const ParamMap&) { return Table(2).rule(2, 1, {{1, 1}}).algebra; }},
      {"s3_1",
       [](const ParamMap& p) {
         Scalar a = require_nonzero(p, "s3_1", "a");
         return Table(3).rule(3, 1, {{1, 1}}).rule(3, 2, {{2, a}}).algebra;
       }},
      {"s3_2",
       [](const ParamMap&) { return Table(3).rule(3, 1, {{1, 1}}).rule(3, 2, {{1, 1}, {2, 1}}).algebra; }},
      {"s4_1", [](const ParamMap&) { return Table(4).rule(4, 2, {{1, 1}}).rule(4, 3, {{3, 1}}).algebra; }},
      {"s4_2",
       [](const ParamMap&) {
         return Table(4).rule(4, 1, {{1, 1}}).rule(4, 2, {{1, 1}, {2, 1}}).rule(4, 3, {{2, 1}, {3, 1}}).algebra;
       }},
      {"s4_3",
       [](const ParamMap& p) {
         Scalar a = require_nonzero(p, "s4_3", "a");
         Scalar b = require_nonzero(p, "s4_3", "b");
         return Table(4).rule(4, 1, {{1, 1}}).rule(4, 2, {{2, a}}).rule(4, 3, {{3, b}}).algebra;
       }},
      {"s4_4",
       [](const ParamMap& p) {
         Scalar a = require_nonzero(p, "s4_4", "a");
         return Table(4).rule(4, 1, {{1, 1}}).rule(4, 2, {{1, 1}, {2, 1}}).rule(4, 3, {{3, a}}).algebra;
       }},
      {"s4_6",
       [](const ParamMap&) {
         return Table(4).rule(2, 3, {{1, 1}}).rule(4, 2, {{2, 1}}).rule(4, 3, {{3, -1}}).algebra;
       }},
      {"s4_8",
       [](const ParamMap& p) {
         Scalar a = require_nonzero(p, "s4_8", "a");
         return Table(4)
             .rule(2, 3, {{1, 1}})
             .rule(4, 1, {{1, Scalar(1) + a}})
             .rule(4, 2, {{2, 1}})
             .rule(4, 3, {{3, a}})
             .algebra;
       }},
      {"s4_10",
       [](const ParamMap&) {
         return Table(4)
             .rule(2, 3, {{1, 1}})
             .rule(4, 1, {{1, 2}})
             .rule(4, 2, {{2, 1}})
             .rule(4, 3, {{2, 1}, {3, 1}})
             .algebra;
       }},
      {"s4_11",
       [](const ParamMap&) {
         return Table(4).rule(2, 3, {{1, 1}}).rule(4, 1, {{1, 1}}).rule(4, 2, {{2, 1}}).algebra;
       }},
      {"s6_26",
       [](const ParamMap&) {
         // e1..e6 in the canonical basis (x1..x5, y): x1=e6, x2=e5, x3=e2, x4=e3, x5=e1, y=e4.
         const std::size_t position[] = {4, 2, 3, 5, 1, 0};
         Matrix p(6, 6);
         for (std::size_t r = 0; r < 6; ++r) p(r, position[r]) = Scalar(1);
         LieAlgebra l = change_basis(canonical_hp_a1(2), p);
         l.set_labels(default_labels(6, "e"));
         return l;
       }},
  };
  return table;
}

}  // namespace

const std::vector<LabelInfo>& labels() {
  static const std::vector<LabelInfo> info = {
      {"A", {"n"}, "Abelian algebra A(n)"},
      {"H", {"p"}, "Heisenberg algebra H_p, dimension 2p+1"},
      {"F4", {}, "model filiform algebra: [x1,x2]=x3, [x1,x3]=x4"},
      {"canonical_HpA1", {"p"}, "canonical H_p-A(1) algebra on x1..x_{2p+1}, y"},
      {"s2_1", {}, "[x2,x1]=x1"},
      {"s3_1", {"a"}, "[x3,x1]=x1, [x3,x2]=a x2"},
      {"s3_2", {}, "[x3,x1]=x1, [x3,x2]=x1+x2"},
      {"s4_1", {}, "[x4,x2]=x1, [x4,x3]=x3"},
      {"s4_2", {}, "[x4,x1]=x1, [x4,x2]=x1+x2, [x4,x3]=x2+x3"},
      {"s4_3", {"a", "b"}, "[x4,x1]=x1, [x4,x2]=a x2, [x4,x3]=b x3"},
      {"s4_4", {"a"}, "[x4,x1]=x1, [x4,x2]=x1+x2, [x4,x3]=a x3"},
      {"s4_6", {}, "[x2,x3]=x1, [x4,x2]=x2, [x4,x3]=-x3"},
      {"s4_8", {"a"}, "[x2,x3]=x1, [x4,x1]=(1+a)x1, [x4,x2]=x2, [x4,x3]=a x3"},
      {"s4_10", {}, "[x2,x3]=x1, [x4,x1]=2x1, [x4,x2]=x2, [x4,x3]=x2+x3"},
      {"s4_11", {}, "[x2,x3]=x1, [x4,x1]=x1, [x4,x2]=x2"},
      {"s6_26", {}, "canonical_HpA1(2) with x1=e6, x2=e5, x3=e2, x4=e3, x5=e1, y=e4"},
  };
  return info;
}

LieAlgebra make(const std::string& label, const ParamMap& params) {
  auto it = makers().find(label);
  if (it == makers().end()) throw Error(ErrorCode::UnknownLabel, "unknown catalog label '" + label + "'", label);
  LieAlgebra l = it->second(params);
  ValidationReport report = validate(l);
  if (!report.ok) throw Error(ErrorCode::InternalContradiction, "catalog algebra " + label + " violates Jacobi");
  return l;
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

LieAlgebra heisenberg(std::size_t p) {
  const std::size_t n = 2 * p + 1;
  LieAlgebra l(n);
  for (std::size_t k = 0; k < p; ++k) l.set_bracket(2 * k, 2 * k + 1, unit_vector(n, 2 * p));
  return l;
}

LieAlgebra canonical_hp_a1(std::size_t p) {
  const std::size_t n = 2 * p + 2;
  std::vector<std::string> names = default_labels(2 * p + 1);
  names.push_back("y");
  LieAlgebra l(n, names);
  for (std::size_t k = 0; k < p; ++k) l.set_bracket(2 * k, 2 * k + 1, unit_vector(n, 2 * p));
  l.set_bracket(0, n - 1, unit_vector(n, n - 1));
  return l;
}

const std::vector<CatalogEntry>& solvable_fixtures() {
  static const std::vector<CatalogEntry> fixtures = [] {
    const Scalar half = Scalar::fraction(1, 2);
    const Scalar third = Scalar::fraction(1, 3);
    return std::vector<CatalogEntry>{
        {"s2_1", {}, "A(1)-A(1)", {2, 1, 1}, {2, 1, 0}, {0}},
        {"s3_1", {{"a", half}}, "A(1)-A(2)", {3, 2, 2}, {3, 2, 0}, {0, 1}},
        {"s3_2", {}, "A(1)-A(2)", {3, 2, 2}, {3, 2, 0}, {0, 1}},
        {"s4_1", {}, "H1-A(1)", {4, 2, 1, 1}, {4, 2, 1, 0}, {2}},
        {"s4_2", {}, "A(1)-A(3)", {4, 3, 3}, {4, 3, 0}, {0, 1, 2}},
        {"s4_3", {{"a", half}, {"b", third}}, "A(1)-A(3)", {4, 3, 3}, {4, 3, 0}, {0, 1, 2}},
        {"s4_4", {{"a", Scalar::parse("1/2+1/2*i")}}, "A(1)-A(3)", {4, 3, 3}, {4, 3, 0}, {0, 1, 2}},
        {"s4_6", {}, "A(1)-H1", {4, 3, 3}, {4, 3, 1, 0}, {0, 1, 2}},
        {"s4_8", {{"a", half}}, "A(1)-H1", {4, 3, 3}, {4, 3, 1, 0}, {0, 1, 2}},
        {"s4_10", {}, "A(1)-H1", {4, 3, 3}, {4, 3, 1, 0}, {0, 1, 2}},
        {"s4_11", {}, "A(2)-A(2)", {4, 2, 2}, {4, 2, 0}, {0, 1}},
        {"s6_26", {}, "H2-A(1)", {6, 2, 1, 1}, {6, 2, 1, 0}, {3}},
        {"canonical_HpA1", {{"p", Scalar(1)}}, "H1-A(1)", {4, 2, 1, 1}, {4, 2, 1, 0}, {3}},
        {"canonical_HpA1", {{"p", Scalar(2)}}, "H2-A(1)", {6, 2, 1, 1}, {6, 2, 1, 0}, {5}},
    };
  }();
  return fixtures;
}

LieAlgebra make(const CatalogEntry& entry) { return make(entry.label, entry.params); }

}  // namespace liealg::catalog
