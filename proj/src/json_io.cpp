#include "filiaut/json_io.hpp"

namespace filiaut {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Family family_field(const Json& j) {
  const Json& v = field(j, "family");
  if (!v.is_string()) bad("field \"family\" must be a string");
  const auto f = parse_family(v.get<std::string>());
  if (!f) bad("unknown family: " + v.get<std::string>());
  return *f;
}

}  // namespace

Json to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) bad("rational values must be strings like \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json to_json(const Cplx& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

RVector rvector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("vectors must be nonempty arrays");
  RVector v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) v(i) = rational_from_json(j[i]);
  return v;
}

Json to_json(const RMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

RMatrix rmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrices must be nonempty arrays of rows");
  const int rows = static_cast<int>(j.size());
  RMatrix m;
  for (int i = 0; i < rows; ++i) {
    const RVector row = rvector_from_json(j[i]);
    if (i == 0)
      m.resize(rows, row.size());
    else if (row.size() != m.cols())
      bad("matrix rows have inconsistent lengths");
    m.row(i) = row.transpose();
  }
  return m;
}

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const Algebra& alg) {
  if (alg.family) return Json{{"family", to_string(*alg.family)}, {"n", alg.n}};
  Json table = Json::array();
  for (const Term& t : alg.terms)
    table.push_back(Json::array({t.i + 1, t.j + 1, t.k + 1, to_json(t.c)}));
  return Json{{"custom", true}, {"n", alg.n}, {"table", table}};
}

Algebra algebra_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 1) bad("dimension must be positive");
  if (j.contains("custom") && j.at("custom").is_boolean() && j.at("custom").get<bool>()) {
    const Json& table = field(j, "table");
    if (!table.is_array()) bad("field \"table\" must be an array");
    std::vector<Term> terms;
    for (const Json& row : table) {
      if (!row.is_array() || row.size() != 4) bad("table rows must be [i, j, k, \"c\"]");
      Term t;
      for (int p = 0; p < 3; ++p)
        if (!row[p].is_number_integer()) bad("table indices must be integers");
      t.i = row[0].get<int>() - 1;
      t.j = row[1].get<int>() - 1;
      t.k = row[2].get<int>() - 1;
      if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
        bad("table indices must lie in 1..n");
      t.c = rational_from_json(row[3]);
      terms.push_back(t);
    }
    return custom_algebra(n, terms);
  }
  try {
    return make_algebra(family_field(j), n);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json to_json(const AutParams<Rational>& p) {
  Json out{{"family", to_string(p.family)}, {"n", p.n}};
  Json a = Json::array();
  for (const auto& v : p.a) a.push_back(to_json(v));
  out["a"] = a;
  if (p.b_nm1) out["b_nm1"] = to_json(*p.b_nm1);
  if (p.b_n) out["b_n"] = to_json(*p.b_n);
  if (p.sqrt_a1) out["sqrt_a1"] = to_json(*p.sqrt_a1);
  return out;
}

Json to_json(const AutParams<Cplx>& p) {
  Json out{{"family", to_string(p.family)}, {"n", p.n}};
  Json a = Json::array();
  for (const auto& v : p.a) a.push_back(to_json(v));
  out["a"] = a;
  if (p.b_nm1) out["b_nm1"] = to_json(*p.b_nm1);
  if (p.b_n) out["b_n"] = to_json(*p.b_n);
  if (p.sqrt_a1) out["sqrt_a1"] = to_json(*p.sqrt_a1);
  return out;
}

AutParams<Rational> params_from_json(const Json& j) {
  AutParams<Rational> p;
  p.family = family_field(j);
  p.n = int_field(j, "n");
  const Json& a = field(j, "a");
  if (!a.is_array()) bad("field \"a\" must be an array");
  for (const Json& v : a) p.a.push_back(rational_from_json(v));
  if (j.contains("b_nm1")) p.b_nm1 = rational_from_json(j.at("b_nm1"));
  if (j.contains("b_n")) p.b_n = rational_from_json(j.at("b_n"));
  if (j.contains("sqrt_a1")) p.sqrt_a1 = rational_from_json(j.at("sqrt_a1"));
  return p;
}

Json to_json(const PointMap& pm) {
  Json samples = Json::array();
  for (const auto& s : pm.samples)
    samples.push_back(Json{{"x", to_json(s.x)}, {"fx", to_json(s.fx)}});
  return Json{{"family", to_string(pm.family)}, {"n", pm.n}, {"samples", samples}};
}

PointMap pointmap_from_json(const Json& j) {
  PointMap pm;
  pm.family = family_field(j);
  pm.n = int_field(j, "n");
  const Json& samples = field(j, "samples");
  if (!samples.is_array()) bad("field \"samples\" must be an array");
  for (const Json& s : samples)
    pm.samples.push_back({rvector_from_json(field(s, "x")), rvector_from_json(field(s, "fx"))});
  return pm;
}

Json to_json(const WitnessOutcome& w) {
  Json out{{"ok", w.ok}, {"branch", w.branch}};
  if (w.ok) {
    out["exactness"] = w.exact ? "exact" : "approx";
    out["residual"] = w.residual;
    if (w.exact && w.params_exact)
      out["params"] = to_json(*w.params_exact);
    else if (w.params_approx)
      out["params"] = to_json(*w.params_approx);
  } else {
    out["error"] = w.error;
  }
  return out;
}

Json to_json(const LocalCheck& lc) {
  Json out{{"verdict", lc.ok ? "pass" : "fail"},
           {"shape", lc.shape.ok ? "pass" : "fail"},
           {"samples_checked", lc.samples_checked}};
  if (!lc.ok) out["detail"] = lc.detail;
  if (lc.failed_x) out["failed_x"] = to_json(*lc.failed_x);
  if (!lc.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& sw : lc.witnesses) {
      Json entry = to_json(sw.outcome);
      entry["x"] = to_json(sw.x);
      ws.push_back(entry);
    }
    out["witnesses"] = ws;
  }
  return out;
}

Json to_json(const SurveyReport& rep) {
  Json necessity{{"total", rep.necessity_total}, {"failures", rep.necessity_failures}};
  if (!rep.first_necessity_failure.empty())
    necessity["first_failure"] = rep.first_necessity_failure;
  Json sufficiency{{"total", rep.sufficiency_total}, {"failures", rep.sufficiency_failures}};
  if (!rep.first_sufficiency_failure.empty())
    sufficiency["first_failure"] = rep.first_sufficiency_failure;
  return Json{{"family", to_string(rep.family)},
              {"n", rep.n},
              {"variant", to_string(rep.variant)},
              {"necessity", necessity},
              {"sufficiency", sufficiency},
              {"certified", rep.certified()}};
}

Json to_json(const PowerProfile& prof) {
  Json out{{"dims", prof.dims}};
  if (prof.nilindex)
    out["nilindex"] = *prof.nilindex;
  else
    out["nilindex"] = nullptr;
  return out;
}

}  // namespace filiaut
