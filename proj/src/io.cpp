#include "tmsv/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "tmsv/algebras.hpp"
#include "tmsv/bergman.hpp"
#include "tmsv/catalog.hpp"
#include "tmsv/cohomology.hpp"
#include "tmsv/errors.hpp"
#include "tmsv/face_complex.hpp"
#include "tmsv/spectral.hpp"

namespace tmsv {

namespace {

std::vector<std::string> label_list(const Matroid& m, Mask s) {
  std::vector<std::string> out;
  for (int e : mask_elements(s)) out.push_back(m.labels[e]);
  return out;
}

Json polynomial_coeffs(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.c) out.push_back(to_string(c));
  return out;
}

Json cone_histogram(const Fan& f) {
  std::vector<int> counts(f.max_dim() + 1, 0);
  for (const auto& c : f.cones) ++counts[c.dim()];
  return Json(counts);
}

Json ray_list(const Fan& f) {
  Json out = Json::array();
  for (const auto& r : f.rays) out.push_back(r);
  return out;
}

std::string pair_label(const Matroid& m, const AdmissiblePair& p) {
  return "M(" + m.set_name(p.I) + "," + m.set_name(p.F) + ")";
}

int resolve_pmax(const Matroid& m, int max_p) {
  if (max_p < 0 || max_p > m.rank()) return m.rank();
  return max_p;
}

std::vector<long long> diagonal_dims_of(const Matroid& m) {
  FaceComplex fc = build_face_complex(m);
  auto table = cohomology_table(fc, m.rank());
  std::vector<long long> diag;
  for (int p = 0; p <= m.rank(); ++p) diag.push_back(table[p][p]);
  return diag;
}

Matroid relabel(const Matroid& m, const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& l : m.labels) labels.push_back(prefix + l);
  return from_bases(std::move(labels), m.bases);
}

// Diagonal Hilbert functions multiply across direct sums, on the three
// fixed factor pairs.
bool product_behaviour_check() {
  const std::pair<const char*, const char*> pairs[] = {
      {"U(1,1)", "U(1,1)"}, {"parallel(2)", "U(1,1)"}, {"U(1,1)", "parallel(2)"}};
  for (const auto& [left, right] : pairs) {
    Matroid a = relabel(catalog_matroid(left), "l");
    Matroid b = relabel(catalog_matroid(right), "r");
    auto da = diagonal_dims_of(a);
    auto db = diagonal_dims_of(b);
    auto ds = diagonal_dims_of(direct_sum(a, b));
    std::vector<long long> conv(da.size() + db.size() - 1, 0);
    for (size_t i = 0; i < da.size(); ++i)
      for (size_t j = 0; j < db.size(); ++j) conv[i + j] += da[i] * db[j];
    if (conv != ds) return false;
  }
  return true;
}

}  // namespace

Matroid parse_matroid(const std::string& text, std::string* name_out) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document is not a JSON object");
  if (!doc.contains("ground_set") || !doc["ground_set"].is_array())
    throw ParseError("missing ground_set list");
  if (!doc.contains("bases") || !doc["bases"].is_array())
    throw ParseError("missing bases list");
  std::vector<std::string> labels;
  for (const auto& g : doc["ground_set"]) {
    if (!g.is_string()) throw ParseError("ground_set entries must be strings");
    labels.push_back(g.get<std::string>());
  }
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw ParseError("duplicate ground_set label: " + labels[i]);
  std::vector<std::vector<std::string>> bases;
  for (const auto& b : doc["bases"]) {
    if (!b.is_array()) throw ParseError("bases entries must be lists");
    std::vector<std::string> basis;
    for (const auto& e : b) {
      if (!e.is_string()) throw ParseError("basis elements must be strings");
      basis.push_back(e.get<std::string>());
    }
    bases.push_back(std::move(basis));
  }
  if (name_out) {
    *name_out = doc.contains("name") && doc["name"].is_string()
                    ? doc["name"].get<std::string>()
                    : "matroid";
  }
  return from_bases(std::move(labels), bases);
}

Matroid load_matroid(const std::string& arg, std::string* name_out) {
  const std::string prefix = "catalog:";
  if (arg.rfind(prefix, 0) == 0) {
    std::string name = arg.substr(prefix.size());
    if (name_out) *name_out = name;
    return catalog_matroid(name);
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read matroid file: " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matroid(buf.str(), name_out);
}

std::vector<std::string> check_names() {
  return {"off-diagonal-vanishing", "diagonal-whitney",       "whitney-identity",
          "spectral-consistency",   "koszul-acyclicity",      "chain-level-soundness",
          "coextension-identity",   "fan-poincare-duality",   "theorem2",
          "stratification-census",  "product-behaviour"};
}

Json info_report(const Matroid& m, const std::string& name) {
  Json out;
  out["matroid"] = name;
  out["ground_set"] = m.labels;
  out["rank"] = m.rank();
  out["loops"] = label_list(m, m.loops());
  Json bases = Json::array();
  for (Mask b : m.bases) bases.push_back(label_list(m, b));
  out["bases"] = bases;
  out["whitney"] = whitney_numbers(m);
  out["f_vector"] = f_vector(m);
  FlatLattice lat = flat_lattice(m);
  Json flats = Json::array();
  for (size_t i = 0; i < lat.flats.size(); ++i)
    flats.push_back({{"rank", lat.flat_rank[i]}, {"set", m.set_name(lat.flats[i])}});
  out["flats"] = flats;
  out["characteristic_polynomial"] = polynomial_coeffs(characteristic_polynomial(m));
  out["reduced_characteristic_polynomial"] =
      m.loops() ? Json(nullptr)
                : polynomial_coeffs(reduced_characteristic_polynomial(m));
  out["admissible_pairs"] = static_cast<int>(admissible_pairs(m).size());
  return out;
}

Json fan_report(const Matroid& m, const std::string& name) {
  Json out;
  out["matroid"] = name;
  Fan aug = build_augmented(m);
  out["augmented_fan"] = {{"ambient", aug.ambient},
                          {"rays", ray_list(aug)},
                          {"cones_by_dim", cone_histogram(aug)}};
  if (m.loops() == 0 && m.rank() >= 1) {
    Fan berg = build_bergman(m);
    out["bergman_fan"] = {{"ambient", berg.ambient},
                          {"rays", ray_list(berg)},
                          {"cones_by_dim", cone_histogram(berg)}};
  } else {
    out["bergman_fan"] = nullptr;
  }
  out["ambient_compatible"] = delta_compatible(aug, pi1_power_fan(m.n()));
  out["support_identification"] = support_identification_check(m);
  return out;
}

Json faces_report(const Matroid& m, const std::string& name) {
  Json out;
  out["matroid"] = name;
  FaceComplex fc = build_face_complex(m);
  std::vector<int> by_dim(fc.top_dim() + 1, 0);
  for (const auto& c : fc.cells) ++by_dim[c.dim()];
  out["cells_by_dim"] = by_dim;
  out["cells"] = static_cast<int>(fc.cells.size());
  out["covers"] = static_cast<int>(fc.covers.size());
  auto strata = stratification(fc, m);
  Json slist = Json::array();
  for (const auto& st : strata)
    slist.push_back({{"stratum", pair_label(m, st.pair)},
                     {"rank", st.pair.rank},
                     {"cells", static_cast<int>(st.cells.size())}});
  out["strata"] = slist;
  out["rank_filtration_census"] = rank_filtration_census(fc, m);
  out["stratum_census"] = stratum_census_check(fc, m);
  out["stratum_order"] = stratum_order_check(fc, m);
  return out;
}

Json cohomology_report(const Matroid& m, const std::string& name, int max_p) {
  Json out;
  out["matroid"] = name;
  const int pmax = resolve_pmax(m, max_p);
  FaceComplex fc = build_face_complex(m);
  auto table = cohomology_table(fc, pmax);
  out["max_p"] = pmax;
  out["cohomology"] = table;
  std::vector<int> diag;
  for (int p = 0; p <= pmax; ++p) diag.push_back(table[p][p]);
  out["diagonal"] = diag;
  out["whitney"] = whitney_numbers(m);
  bool offdiag = true;
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q < static_cast<int>(table[p].size()); ++q)
      if (p != q && table[p][q] != 0) offdiag = false;
  out["off_diagonal_zero"] = offdiag;
  bool dw = true;
  auto w = whitney_numbers(m);
  for (int p = 0; p <= pmax; ++p)
    if (diag[p] != w[p]) dw = false;
  out["diagonal_equals_whitney"] = dw;
  return out;
}

Json spectral_report(const Matroid& m, const std::string& name, int max_p) {
  Json out;
  out["matroid"] = name;
  const int pmax = resolve_pmax(m, max_p);
  out["max_p"] = pmax;
  Json pages = Json::array();
  for (int p = 0; p <= pmax; ++p) {
    E1Page page = e1_page(m, p);
    Json entry;
    entry["p"] = p;
    std::vector<int> dims;
    for (const auto& col : page.basis) dims.push_back(static_cast<int>(col.size()));
    entry["e1_dims"] = dims;
    std::vector<int> ranks;
    for (const auto& d : page.d1) ranks.push_back(rank(d));
    entry["d1_ranks"] = ranks;
    entry["e2_dims"] = e2_dims(page);
    entry["d1_squared_zero"] = d1_squared_zero(page);
    entry["euler"] = euler_check(m, p);
    pages.push_back(entry);
  }
  out["e_pages"] = pages;
  return out;
}

Json algebra_report(const Matroid& m, const std::string& name) {
  Json out;
  out["matroid"] = name;
  MobiusAlgebra b = mobius_algebra(m);
  Json mob;
  mob["hilbert"] = b.hilbert;
  Json flats = Json::array();
  for (size_t i = 0; i < b.lattice.flats.size(); ++i)
    flats.push_back("y_" + m.set_name(b.lattice.flats[i]));
  mob["basis"] = flats;
  out["mobius_algebra"] = mob;
  ChowRing a = chow_ring(build_augmented(m), m.rank() + 1);
  std::vector<int> dims;
  for (int k = 0; k <= a.kmax; ++k) dims.push_back(a.dim(k));
  out["chow_dims"] = dims;
  SubalgebraReport rep = subalgebra_hilbert_and_structure(m);
  out["subalgebra"] = {{"dims", rep.subalgebra_dims},
                       {"top_vanishes", rep.top_vanishes},
                       {"identification", rep.identification},
                       {"hilbert_match", rep.hilbert_match},
                       {"structure_match", rep.structure_match}};
  out["pullback_chain"] = pullback_chain_check(m);
  out["theorem2"] = theorem2_verdict(m, diagonal_dims_of(m));
  return out;
}

bool size_guard_ok(const Matroid& m, bool force_large) {
  return m.n() <= 6 || force_large;
}

Json verification_report(const Matroid& m, const std::string& name,
                         const PipelineOptions& opt, const std::string& only,
                         bool* failed) {
  Json out;
  out["matroid"] = name;
  out["ground_set"] = m.labels;
  out["rank"] = m.rank();
  const int rk = m.rank();
  const auto whitney = whitney_numbers(m);
  out["whitney"] = whitney;
  out["f_vector"] = f_vector(m);
  const bool geo = size_guard_ok(m, opt.force_large);

  std::optional<FaceComplex> fc;
  std::optional<std::vector<std::vector<int>>> table;
  auto need_fc = [&]() -> FaceComplex& {
    if (!fc) fc = build_face_complex(m);
    return *fc;
  };
  auto need_table = [&]() -> std::vector<std::vector<int>>& {
    if (!table) table = cohomology_table(need_fc(), rk);
    return *table;
  };

  Json checks = Json::object();
  bool any_fail = false;
  auto record = [&](const std::string& check, const std::string& status,
                    const std::string& details) {
    checks[check] = {{"status", status}, {"details", details}};
    if (status == "fail") any_fail = true;
  };
  auto wanted = [&](const char* check) {
    return only.empty() || only == check;
  };
  auto run = [&](const char* check, bool needs_geometry, auto&& body) {
    if (!wanted(check)) return;
    if (needs_geometry && !geo) {
      record(check, "skipped", "ground set exceeds the size guard");
      return;
    }
    try {
      body();
    } catch (const Error& e) {
      record(check, "fail", e.what());
    }
  };

  run("off-diagonal-vanishing", true, [&]() {
    auto& t = need_table();
    bool ok = true;
    for (int p = 0; p <= rk; ++p)
      for (int q = 0; q < static_cast<int>(t[p].size()); ++q)
        if (p != q && t[p][q] != 0) ok = false;
    record("off-diagonal-vanishing", ok ? "pass" : "fail",
           ok ? "H^{p,q} = 0 for all p != q" : "nonzero off-diagonal entry");
  });

  run("diagonal-whitney", true, [&]() {
    auto& t = need_table();
    bool ok = true;
    for (int p = 0; p <= rk; ++p)
      if (t[p][p] != whitney[p]) ok = false;
    record("diagonal-whitney", ok ? "pass" : "fail",
           ok ? "diagonal dimensions equal the Whitney numbers"
              : "diagonal differs from the Whitney numbers");
  });

  run("whitney-identity", false, [&]() {
    bool ok = true;
    for (int p = 0; p <= rk; ++p)
      if (N_p(m, p) != whitney[p]) ok = false;
    record("whitney-identity", ok ? "pass" : "fail",
           ok ? "N_p equals W_p for all p" : "N_p differs from W_p");
  });

  if (wanted("spectral-consistency")) {
    try {
      bool euler_ok = true;
      for (int p = 0; p <= rk; ++p)
        if (!euler_check(m, p)) euler_ok = false;
      if (!geo) {
        record("spectral-consistency", euler_ok ? "skipped" : "fail",
               euler_ok ? "page vs cohomology comparison skipped (size "
                          "guard); euler check passed"
                        : "euler check failed");
      } else {
        auto& t = need_table();
        bool rows_ok = true;
        for (int p = 0; p <= rk; ++p) {
          auto e2 = e2_dims(e1_page(m, p));
          for (int a = 0; a < static_cast<int>(e2.size()); ++a)
            if (e2[a] != t[p][a]) rows_ok = false;
        }
        bool ok = euler_ok && rows_ok;
        record("spectral-consistency", ok ? "pass" : "fail",
               ok ? "second page matches cohomology; euler check passed"
                  : "second page or euler check failed");
      }
    } catch (const Error& e) {
      record("spectral-consistency", "fail", e.what());
    }
  }

  run("koszul-acyclicity", false, [&]() {
    bool ok = true;
    for (int p = 0; p <= rk; ++p)
      if (!koszul_check(m, p)) ok = false;
    record("koszul-acyclicity", ok ? "pass" : "fail",
           ok ? "nonempty blocks exact; empty blocks count rank-p flats"
              : "a block violates the decomposition");
  });

  run("chain-level-soundness", true, [&]() {
    check_balanced(need_fc());
    bool d1ok = true;
    for (int p = 0; p <= rk; ++p)
      if (!d1_squared_zero(e1_page(m, p))) d1ok = false;
    record("chain-level-soundness", d1ok ? "pass" : "fail",
           d1ok ? "boundary squares to zero; page differential squares to "
                  "zero; balanced"
                : "page differential fails to square to zero");
  });

  run("coextension-identity", false, [&]() {
    bool ok = coext_f_identity_check(m);
    record("coextension-identity", ok ? "pass" : "fail",
           ok ? "reduced characteristic polynomial of the coextension "
                "matches the independence counts"
              : "identity fails");
  });

  run("fan-poincare-duality", true, [&]() {
    bool ok = true;
    for (const auto& pr : admissible_pairs(m))
      if (!fan_pd_check(minor(m, pr.I, pr.F))) ok = false;
    record("fan-poincare-duality", ok ? "pass" : "fail",
           ok ? "every stratum minor concentrated in top degree with "
                "reversed independence counts"
              : "a stratum minor violates duality");
  });

  run("theorem2", true, [&]() {
    auto& t = need_table();
    std::vector<long long> diag;
    for (int p = 0; p <= rk; ++p) diag.push_back(t[p][p]);
    bool ok = theorem2_verdict(m, diag);
    record("theorem2", ok ? "pass" : "fail",
           ok ? "subalgebra matches the graded Möbius algebra and the "
                "diagonal dimensions"
              : "subalgebra comparison failed");
  });

  run("stratification-census", true, [&]() {
    bool ok = stratum_census_check(need_fc(), m) && stratum_order_check(need_fc(), m);
    record("stratification-census", ok ? "pass" : "fail",
           ok ? "strata are the admissible pairs; closure order matches"
              : "stratification disagrees with the admissible pairs");
  });

  run("product-behaviour", false, [&]() {
    bool ok = product_behaviour_check();
    record("product-behaviour", ok ? "pass" : "fail",
           ok ? "diagonal Hilbert functions multiply across direct sums"
              : "a direct sum fails to factor");
  });

  if (geo && only.empty()) need_table();
  out["cohomology"] = table.has_value() ? Json(*table) : Json(nullptr);

  Json pages = Json::array();
  for (int p = 0; p <= rk; ++p) {
    E1Page page = e1_page(m, p);
    std::vector<int> dims;
    for (const auto& col : page.basis) dims.push_back(static_cast<int>(col.size()));
    Json entry;
    entry["p"] = p;
    entry["e1_dims"] = dims;
    entry["e2_dims"] = e2_dims(page);
    pages.push_back(entry);
  }
  out["e_pages"] = pages;

  out["checks"] = checks;
  if (failed) *failed = any_fail;
  return out;
}

std::string export_stratification_dot(const Matroid& m) {
  auto pairs = admissible_pairs(m);
  const int n = static_cast<int>(pairs.size());
  auto less = [&](int a, int b) {
    return pair_order(pairs[a], pairs[b]) == PairOrder::less;
  };
  std::ostringstream out;
  out << "digraph stratification {\n";
  for (int i = 0; i < n; ++i) out << "  \"" << pair_label(m, pairs[i]) << "\";\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover)
        out << "  \"" << pair_label(m, pairs[a]) << "\" -> \""
            << pair_label(m, pairs[b]) << "\";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace tmsv
