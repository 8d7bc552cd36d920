#include "liealg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/io.hpp"

namespace liealg::cli {
namespace {

using io::Json;

struct Input {
  std::string text;
  std::string digest;
};

Input read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Parse, "cannot read input file", path);
    buf << file.rdbuf();
  }
  Input out{buf.str(), {}};
  out.digest = io::sha256_hex(out.text);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InternalContradiction, "certificate check failed", what);
}

// Tag for solvable nonnilpotent algebras, nilpotent class otherwise.
std::string describe(const LieAlgebra& l) {
  if (is_nilpotent(l)) return recognize_nilpotent(l).to_string();
  return decomposition_tag(l).to_string();
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", out);
  } else if (j.is_string()) {
    out << path << ": " << j.get<std::string>() << "\n";
  } else {
    out << path << ": " << j.dump() << "\n";
  }
}

Json classify_report(const LieAlgebra& l, bool check) {
  Json r = {{"dim", l.dim()}};
  NilpotencyInfo info = nilpotency_solvability(l);
  r["nilpotent"] = info.is_nilpotent;
  r["solvable"] = info.is_solvable;
  if (info.is_nilpotent) {
    r["class"] = recognize_nilpotent(l).to_string();
    r["tag"] = nullptr;
    return r;
  }
  require_solvable_nonnilpotent(l);
  NilpotentDecomposition nd = left_right_nilpotent(l);
  DecompositionTag tag = decomposition_tag(l);
  if (check) {
    require(is_ideal(l, nd.np_radical), "NP is an ideal");
    require(product_space(l, Subspace::full(l.dim()), nd.np_radical) == nd.np_radical, "[L, NP] = NP");
    require(is_nilpotent(nd.left) && is_nilpotent(nd.right), "left and right parts nilpotent");
    require(validate(nd.left).ok && validate(nd.right).ok, "left and right parts are Lie algebras");
  }
  r["tag"] = tag.to_string();
  r["left"] = tag.left.to_string();
  r["right"] = tag.right.to_string();
  r["np_dim"] = nd.np_radical.dim();
  r["np_basis"] = io::matrix_to_json(nd.np_radical.basis());
  r["left_algebra"] = io::algebra_to_json(nd.left);
  r["right_algebra"] = io::algebra_to_json(nd.right);
  r["lcs_dims"] = lower_central_series(l).dims;
  r["extended_dims"] = extended_lcs(l).dims;
  return r;
}

Json series_report(const LieAlgebra& l, const std::string& kind, bool check) {
  SeriesReport s = kind == "derived" ? derived_series(l) : kind == "extended" ? extended_lcs(l) : lower_central_series(l);
  if (check) {
    for (std::size_t k = 0; k < s.terms.size(); ++k) {
      require(s.terms[k].dim() == s.dims[k], "series dims");
      if (k > 0) require(s.terms[k - 1].contains(s.terms[k]), "series is descending");
      if (kind != "extended") require(is_ideal(l, s.terms[k]), "series terms are ideals");
    }
  }
  return io::series_to_json(s);
}

Json canonicalize_report(const LieAlgebra& l, bool check) {
  Canonicalization c = canonicalize_hp_a1(l);
  if (check) {
    require(is_isomorphism_via(l, c.canonical, c.basis), "canonical basis");
    const std::size_t p = (l.dim() - 2) / 2;
    require(c.canonical.same_table(catalog::canonical_hp_a1(p)), "canonical table");
  }
  return {{"basis", io::matrix_to_json(c.basis)},
          {"canonical", io::algebra_to_json(c.canonical)},
          {"tag", decomposition_tag(c.canonical).to_string()}};
}

Json decompose_report(const LieAlgebra& l, const std::string& method, bool check) {
  if (method == "centroid") {
    DecomposabilityVerdict v = decomposability(l);
    if (check && v.witness) require(verify_witness(l, *v.witness), "direct sum witness");
    Json r = io::verdict_to_json(v);
    r["method"] = "centroid";
    return r;
  }
  DirectSumWitness w = decompose_an_a1(l);
  if (check) require(verify_witness(l, w), "direct sum witness");
  Json tags = Json::array();
  for (const auto& c : w.components) tags.push_back(describe(c));
  return {{"method", "theorem"}, {"witness", io::witness_to_json(w)}, {"component_tags", std::move(tags)}};
}

Json structure_report(const LieAlgebra& l, bool check) {
  Extraction e = extract_structure(l);
  if (check) {
    require(verify_constraints(e.data).ok(), "extracted data satisfies the constraints");
    require(change_basis(l, e.basis).same_table(assemble(e.data)), "extraction basis");
  }
  return {{"data", io::structure_to_json(e.data)},
          {"basis", io::matrix_to_json(e.basis)},
          {"tag", decomposition_tag(l).to_string()}};
}

Json build_report(const StructureData& d, bool check) {
  LieAlgebra l = build_from_structure(d);
  if (check) {
    require(validate(l).ok, "built algebra satisfies Jacobi");
    require(read_structure(l, d.family, d.left_dim, d.right_dim) == d, "structure read back");
  }
  return io::algebra_to_json(l);
}

Json conjecture_report(std::size_t n1, std::size_t n2, std::size_t samples, std::uint64_t seed, unsigned threads,
                       bool check) {
  SearchReport r = conjecture_search(n1, n2, samples, seed, threads);
  if (check) {
    for (const auto& d : r.flagged) {
      require(verify_constraints(d).ok(), "flagged instance is valid");
      require(decomposability(build_from_structure(d)).status == VerdictStatus::Indecomposable,
              "flagged instance is indecomposable");
    }
  }
  return io::search_to_json(r);
}

ParamMap parse_params(const std::vector<std::string>& raw) {
  ParamMap out;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::Parse, "parameter must be name=value", p);
    out[p.substr(0, eq)] = Scalar::parse(std::string_view(p).substr(eq + 1));
  }
  return out;
}

Json error_json(const Error& e) {
  return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"context", e.context()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra toolkit over Q(i)", "liealg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string output = "json";
  bool check_all = false;
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--check-all", check_all, "Re-verify every certificate before printing");

  std::string file;
  auto file_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", file, what)->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity");
  file_arg(validate_cmd, "Algebra file or - for stdin");
  std::string kind = "lcs";
  auto* series_cmd = app.add_subcommand("series", "Derived, lower central or extended lower central series");
  file_arg(series_cmd, "Algebra file or - for stdin");
  series_cmd->add_option("--kind", kind)->check(CLI::IsMember({"derived", "lcs", "extended"}));
  auto* classify_cmd = app.add_subcommand("classify", "Decomposition tag and near-perfect radical");
  file_arg(classify_cmd, "Algebra file or - for stdin");
  auto* canon_cmd = app.add_subcommand("canonicalize", "Canonical basis of an H_p-A(1) algebra");
  file_arg(canon_cmd, "Algebra file or - for stdin");
  std::string method = "theorem";
  auto* decompose_cmd = app.add_subcommand("decompose", "Direct sum decomposition");
  file_arg(decompose_cmd, "Algebra file or - for stdin");
  decompose_cmd->add_option("--method", method)->check(CLI::IsMember({"theorem", "centroid"}));
  auto* structure_cmd = app.add_subcommand("structure", "Extract (D, b) structure data");
  file_arg(structure_cmd, "Algebra file or - for stdin");
  auto* build_cmd = app.add_subcommand("build", "Assemble an algebra from (D, b) structure data");
  file_arg(build_cmd, "Structure file or - for stdin");

  std::size_t n1 = 0, n2 = 0, samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  auto* conj_cmd = app.add_subcommand("conjecture", "Random search for indecomposable A(n1)-A(n2) algebras");
  conj_cmd->add_option("--n1", n1)->required();
  conj_cmd->add_option("--n2", n2)->required();
  conj_cmd->add_option("--samples", samples)->required();
  conj_cmd->add_option("--seed", seed)->required();
  conj_cmd->add_option("--threads", threads, "Worker threads, 0 for all cores");

  auto* catalog_cmd = app.add_subcommand("catalog", "Named algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog labels");
  std::string label;
  std::vector<std::string> params;
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Emit a catalog algebra");
  emit_cmd->add_option("label", label)->required();
  emit_cmd->add_option("--param", params, "name=value");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::Success&) {
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    Json j = {{"code", "Parse"}, {"message", e.what()}, {"context", ""}, {"version", std::string(kVersion)}};
    out << j.dump(2) << "\n";
    return 2;
  }

  Json report;
  std::string digest = io::sha256_hex("");
  int status = 0;
  try {
    auto algebra = [&] {
      Input input = read_input(file, in);
      digest = input.digest;
      return io::parse_algebra(input.text);
    };
    if (validate_cmd->parsed()) {
      LieAlgebra l = algebra();
      ValidationReport v = validate(l);
      report = {{"ok", v.ok}};
      report["failing_triple"] = v.ok ? Json(nullptr) : Json(v.triple);
      report["residual"] = v.ok ? Json(nullptr) : io::vector_to_json(v.residual);
      status = v.ok ? 0 : 1;
    } else if (series_cmd->parsed()) {
      report = series_report(algebra(), kind, check_all);
    } else if (classify_cmd->parsed()) {
      report = classify_report(algebra(), check_all);
    } else if (canon_cmd->parsed()) {
      report = canonicalize_report(algebra(), check_all);
    } else if (decompose_cmd->parsed()) {
      report = decompose_report(algebra(), method, check_all);
    } else if (structure_cmd->parsed()) {
      report = structure_report(algebra(), check_all);
    } else if (build_cmd->parsed()) {
      Input input = read_input(file, in);
      digest = input.digest;
      report = build_report(io::parse_structure(input.text), check_all);
    } else if (conj_cmd->parsed()) {
      digest = io::sha256_hex("conjecture " + std::to_string(n1) + " " + std::to_string(n2) + " " +
                              std::to_string(samples) + " " + std::to_string(seed));
      report = conjecture_report(n1, n2, samples, seed, threads, check_all);
    } else if (list_cmd->parsed()) {
      Json labels = Json::array();
      for (const auto& info : catalog::labels())
        labels.push_back({{"label", info.label}, {"params", info.params}, {"description", info.description}});
      report = {{"labels", std::move(labels)}};
    } else if (emit_cmd->parsed()) {
      std::string key = "catalog " + label;
      for (const auto& p : params) key += " " + p;
      digest = io::sha256_hex(key);
      LieAlgebra l = catalog::make(label, parse_params(params));
      if (check_all) require(validate(l).ok, "catalog algebra satisfies Jacobi");
      report = io::algebra_to_json(l);
    }
  } catch (const Error& e) {
    Json j = error_json(e);
    j["version"] = std::string(kVersion);
    j["input_digest"] = digest;
    if (output == "text") {
      flatten(j, "", out);
    } else {
      out << j.dump(2) << "\n";
    }
    return e.code() == ErrorCode::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    Json j = {{"code", "InternalContradiction"}, {"message", e.what()}, {"context", ""},
              {"version", std::string(kVersion)}, {"input_digest", digest}};
    out << j.dump(2) << "\n";
    return 1;
  }

  report["version"] = std::string(kVersion);
  report["input_digest"] = digest;
  if (check_all) report["checked"] = true;
  if (output == "text") {
    flatten(report, "", out);
  } else {
    out << report.dump(2) << "\n";
  }
  return status;
}

}  // namespace liealg::cli
