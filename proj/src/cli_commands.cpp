#include "verlinde/cli_commands.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "verlinde/errors.hpp"

namespace verlinde::cli {

using json = nlohmann::ordered_json;

namespace {

std::string fmt_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// 12-digit deterministic doubles stored as JSON numbers.
json num(double x) { return json::parse(fmt_double(x)); }

std::string group_name(const std::vector<long long>& factors) {
  if (factors.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(factors[i]);
  }
  return s;
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

std::vector<long long> parse_labels(const std::string& s, int rank) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  if (static_cast<int>(out.size()) != rank)
    throw precondition_error("expected " + std::to_string(rank) +
                             " comma-separated labels, got '" + s + "'");
  return out;
}

std::vector<std::vector<long long>> parse_phi(const std::string& s) {
  std::vector<std::vector<long long>> out;
  std::stringstream ss(s);
  std::string group;
  while (std::getline(ss, group, ';')) {
    std::vector<long long> tup;
    std::stringstream gs(group);
    std::string tok;
    while (std::getline(gs, tok, ',')) tup.push_back(std::stoll(tok));
    out.push_back(tup);
  }
  return out;
}

std::string csv_escape(const std::string& s) { return s; }

}  // namespace

CenterSubgroup parse_center(const RootDatum& rd, const std::string& spec) {
  if (spec == "full") return center_group(rd);
  if (spec == "trivial") return subgroup_from_generators(rd, {});
  if (spec.rfind("gen:", 0) == 0) {
    std::vector<CenterElement> gens;
    std::stringstream ss(spec.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty() && (tok[0] == 'w' || tok[0] == 'W')) tok = tok.substr(1);
      int i = std::stoi(tok);
      if (i < 1 || i > rd.rank)
        throw precondition_error("center generator index out of range: " + tok);
      if (rd.marks[i - 1] != 1)
        throw precondition_error("vertex w" + std::to_string(i) +
                                 " is not a coweight-lattice vertex");
      gens.push_back(element_from_coweight(rd, rd.fund_coweights[i - 1]));
    }
    return subgroup_from_generators(rd, gens);
  }
  throw precondition_error("cannot parse center spec '" + spec +
                           "' (expected trivial|full|gen:...)");
}

std::string cmd_roots(const Request& r) {
  RootDatum rd = build_root_datum(LieType::parse(r.type));
  json out;
  out["schema"] = 1;
  out["type"] = rd.type.name();
  out["rank"] = rd.rank;
  out["ambient_dim"] = rd.ambient;
  out["coxeter_number"] = rd.coxeter_number;
  out["dual_coxeter_number"] = rd.dual_coxeter_number;
  out["metric_scale"] = rat_str(rd.metric_scale);
  out["num_positive_roots"] = rd.num_positive_roots();
  out["marks"] = rd.marks;
  out["comarks"] = rd.comarks;
  json rows = json::array();
  for (int i = 0; i < rd.rank; ++i) {
    json row;
    row["i"] = i + 1;
    row["root"] = vec_str(rd.simple_roots[i]);
    row["coroot"] = vec_str(rd.simple_coroots[i]);
    row["weight"] = vec_str(rd.fund_weights[i]);
    row["coweight"] = vec_str(rd.fund_coweights[i]);
    rows.push_back(row);
  }
  out["simple_data"] = rows;
  out["highest_root"] = vec_str(rd.theta);
  out["rho"] = vec_str(rd.rho);
  if (r.format == "csv") {
    std::string s = "i,root,coroot,weight,coweight\n";
    for (int i = 0; i < rd.rank; ++i)
      s += std::to_string(i + 1) + "," + vec_str(rd.simple_roots[i]) + "," +
           vec_str(rd.simple_coroots[i]) + "," + vec_str(rd.fund_weights[i]) +
           "," + vec_str(rd.fund_coweights[i]) + "\n";
    return s;
  }
  return out.dump(2) + "\n";
}

std::string cmd_levels(const Request& r) {
  RootDatum rd = build_root_datum(LieType::parse(r.type));
  CenterSubgroup ZG = center_group(rd);
  CenterSubgroup Z = parse_center(rd, r.center);
  auto [k0, k1] = levels(rd, Z);
  json out;
  out["schema"] = 1;
  out["type"] = rd.type.name();
  out["ZG"] = group_name(ZG.invariant_factors);
  out["Z"] = group_name(Z.invariant_factors);
  out["k0"] = k0;
  out["k1"] = k1;
  if (r.format == "csv") {
    return "type,ZG,Z,k0,k1\n" + rd.type.name() + "," +
           group_name(ZG.invariant_factors) + "," +
           group_name(Z.invariant_factors) + "," + std::to_string(k0) + "," +
           std::to_string(k1) + "\n";
  }
  return out.dump(2) + "\n";
}

std::string cmd_smatrix(const Request& r) {
  if (r.k < 0) throw precondition_error("smatrix: level must be nonnegative");
  VerlindeContext ctx = VerlindeContext::build(LieType::parse(r.type), r.k);
  if (r.normalized) ctx.S = ctx.S.sign_normalized();
  json out;
  out["schema"] = 1;
  out["type"] = ctx.rd.type.name();
  out["k"] = r.k;
  out["num_weights"] = ctx.S.n;
  out["torus_order"] = ctx.S.torus_order.str();
  json weights = json::array();
  for (const auto& w : ctx.table.weights) weights.push_back(w.labels);
  out["weights"] = weights;
  json rows = json::array();
  for (int i = 0; i < ctx.S.n; ++i) {
    json row = json::array();
    for (int j = 0; j < ctx.S.n; ++j) {
      row.push_back(json::array({num(ctx.S(i, j).real()), num(ctx.S(i, j).imag())}));
    }
    rows.push_back(row);
  }
  out["entries"] = rows;
  json diag;
  diag["unitarity_defect"] = num(ctx.S.max_unitarity_defect);
  diag["symmetry_defect"] = num(ctx.S.max_symmetry_defect);
  out["diagnostics"] = diag;
  if (r.format == "csv") {
    std::string s = "i,j,re,im\n";
    for (int i = 0; i < ctx.S.n; ++i)
      for (int j = 0; j < ctx.S.n; ++j)
        s += std::to_string(i) + "," + std::to_string(j) + "," +
             fmt_double(ctx.S(i, j).real()) + "," + fmt_double(ctx.S(i, j).imag()) +
             "\n";
    return s;
  }
  return out.dump(2) + "\n";
}

std::string cmd_delta(const Request& r) {
  RootDatum rd = build_root_datum(LieType::parse(r.type));
  CenterSubgroup Z = parse_center(rd, r.center);
  auto [k0, k1] = levels(rd, Z);
  if (r.k <= 0 || r.k % k0 != 0)
    throw precondition_error("delta: level " + std::to_string(r.k) +
                             " is not a positive multiple of k0 = " +
                             std::to_string(k0));
  json out;
  out["schema"] = 1;
  out["type"] = rd.type.name();
  out["Z"] = group_name(Z.invariant_factors);
  out["k"] = r.k;
  out["k0"] = k0;
  out["k1"] = k1;
  json rows = json::array();
  std::string csv = "c1,c2,exponent,value,closed_form,match,defined\n";
  for (int a = 0; a < Z.size(); ++a)
    for (int b = 0; b < Z.size(); ++b) {
      json row;
      row["c1"] = Z.element_name(a);
      row["c2"] = Z.element_name(b);
      std::string expo = "", val = "", cf = "", match = "";
      bool defined = true;
      try {
        PhaseValue d = delta(rd, Z, r.k, Z.elements[a], Z.elements[b]);
        expo = rat_str(d.exponent);
        val = d.str();
        row["exponent"] = expo;
        row["value"] = val;
      } catch (const precondition_error&) {
        defined = false;
        row["exponent"] = nullptr;
        row["value"] = nullptr;
      }
      try {
        PhaseValue c = delta_closed_form(rd, Z, r.k, Z.elements[a], Z.elements[b]);
        cf = rat_str(c.exponent);
        row["closed_form"] = cf;
        if (defined) {
          bool m = (cf == expo);
          row["match"] = m;
          match = m ? "true" : "false";
        } else {
          row["match"] = nullptr;
        }
      } catch (const precondition_error&) {
        row["closed_form"] = nullptr;
        row["match"] = nullptr;
      }
      row["defined"] = defined;
      rows.push_back(row);
      csv += Z.element_name(a) + "," + Z.element_name(b) + "," + expo + "," +
             val + "," + cf + "," + match + "," + (defined ? "true" : "false") +
             "\n";
    }
  out["rows"] = rows;
  if (r.format == "csv") return csv;
  return out.dump(2) + "\n";
}

std::string cmd_verlinde(const Request& r) {
  RootDatum rd = build_root_datum(LieType::parse(r.type));
  if (r.k <= 0) throw precondition_error("verlinde: level must be positive");
  if (r.genus < 0) throw precondition_error("verlinde: negative genus");
  VerlindeContext ctx = VerlindeContext::build(rd.type, r.k);
  CenterSubgroup Z = parse_center(rd, r.center);
  auto [k0, k1] = levels(rd, Z);
  if (r.k % k0 != 0)
    throw precondition_error("verlinde: level " + std::to_string(r.k) +
                             " is not a multiple of k0 = " + std::to_string(k0));
  auto action = CenterActionOnWeights::build(ctx.rd, ctx.W, Z, ctx.table);

  ModuliSpec spec;
  spec.genus = r.genus;
  spec.k = r.k;
  spec.Z = &Z;
  const size_t ngen = Z.invariant_factors.size();
  if (r.phi.empty()) {
    spec.phi.assign(2 * r.genus,
                    CenterCharacter{std::vector<long long>(ngen, 0)});
  } else {
    auto tuples = parse_phi(r.phi);
    if (tuples.size() != static_cast<size_t>(2 * r.genus))
      throw precondition_error("verlinde: need 2*genus phi tuples");
    for (auto& t : tuples) {
      if (t.size() != ngen)
        throw precondition_error(
            "verlinde: each phi tuple needs one exponent per center generator");
      spec.phi.push_back(CenterCharacter{t});
    }
  }

  std::vector<int> mu_indices;
  if (r.mu.empty()) {
    for (int i = 0; i < ctx.S.n; ++i) mu_indices.push_back(i);
  } else {
    int idx = ctx.table.index_of(LevelWeight{parse_labels(r.mu, rd.rank)});
    if (idx < 0)
      throw precondition_error("verlinde: mu is not a level-" +
                               std::to_string(r.k) + " weight");
    mu_indices.push_back(idx);
  }

  json out;
  out["schema"] = 1;
  out["type"] = rd.type.name();
  out["Z"] = group_name(Z.invariant_factors);
  out["k"] = r.k;
  out["genus"] = r.genus;
  json rows = json::array();
  std::string csv = "mu,Q,leading,correction,residual\n";
  for (int idx : mu_indices) {
    spec.mu = ctx.table.weights[idx];
    QuantizationResult q = verlinde_nsc(ctx, action, spec, r.tolerance);
    json row;
    row["mu"] = ctx.table.weights[idx].labels;
    row["Q"] = q.value;
    row["leading"] = num(q.leading);
    row["correction"] = num(q.correction);
    json diag;
    diag["residual"] = num(q.residual);
    row["diagnostics"] = diag;
    rows.push_back(row);
    std::string mus;
    for (size_t t = 0; t < ctx.table.weights[idx].labels.size(); ++t) {
      if (t) mus += " ";
      mus += std::to_string(ctx.table.weights[idx].labels[t]);
    }
    csv += csv_escape(mus) + "," + std::to_string(q.value) + "," +
           fmt_double(q.leading) + "," + fmt_double(q.correction) + "," +
           fmt_double(q.residual) + "\n";
  }
  out["rows"] = rows;
  if (r.format == "csv") return csv;
  return out.dump(2) + "\n";
}

}  // namespace verlinde::cli
