#include "chowbound/io.hpp"

#include <fstream>

#include "chowbound/heights.hpp"

namespace chowbound {

namespace {

Json exps_json(const Shape& shape, const Monomial& m) {
  Json rows = Json::array();
  for (int b = 0; b < shape.blocks(); ++b) {
    Json row = Json::array();
    for (int v = 0; v < shape.block_size(); ++v) row.push_back(m[shape.var(b, v)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Ring, class CoeffFn>
Json poly_json(const MHPoly<Ring>& f, CoeffFn&& coeff) {
  Json j;
  j["r"] = f.shape().r;
  j["s"] = f.shape().s;
  j["multidegree"] = f.multidegree();
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json term;
    term["coeff"] = coeff(t.coeff);
    term["exps"] = exps_json(f.shape(), t.exps);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

BigInt bigint_from_json(const Json& v) {
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  throw InputError("coefficient must be a decimal string");
}

std::vector<BigInt> bigint_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  std::vector<BigInt> out;
  for (const auto& v : j.at(key)) out.push_back(bigint_from_json(v));
  return out;
}

Json real_json(const HighPrecReal& x) { return to_decimal(x); }

Json prime_list(const std::vector<std::uint32_t>& v) {
  Json a = Json::array();
  for (auto p : v) a.push_back(p);
  return a;
}

}  // namespace

Json to_json(const ZPoly& f) {
  return poly_json(f, [](const BigInt& c) { return c.get_str(); });
}

Json to_json(const FPoly& f) {
  const FiniteField& K = f.ring();
  return poly_json(f, [&](const FFElem& c) { return K.digits(c); });
}

ZPoly zpoly_from_json(const Json& j) {
  const int r = get_field<int>(j, "r");
  const int s = get_field<int>(j, "s");
  const auto md = get_field<std::vector<int>>(j, "multidegree");
  const Shape shape{r, s};
  validate_shape(shape);
  if (!j.contains("terms") || !j.at("terms").is_array()) throw InputError("missing array 'terms'");
  std::vector<ZPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("coeff") || !t.contains("exps")) throw InputError("term needs 'coeff' and 'exps'");
    ZPoly::Term term;
    term.coeff = bigint_from_json(t.at("coeff"));
    const auto& rows = t.at("exps");
    if (!rows.is_array() || static_cast<int>(rows.size()) != shape.blocks())
      throw InputError("'exps' must have one row per block");
    for (int b = 0; b < shape.blocks(); ++b) {
      const auto& row = rows.at(b);
      if (!row.is_array() || static_cast<int>(row.size()) != shape.block_size())
        throw InputError("exponent row has wrong length");
      for (int v = 0; v < shape.block_size(); ++v) {
        const int e = row.at(v).get<int>();
        if (e < 0 || e > 0xffff) throw InputError("exponent out of range");
        term.exps[shape.var(b, v)] = static_cast<std::uint16_t>(e);
      }
    }
    terms.push_back(std::move(term));
  }
  return ZPoly::from_terms(Integers{}, shape, md, std::move(terms));
}

Json to_json(const ChowPoint& c) {
  Json j = to_json(c.form());
  j["kind"] = "chow_point";
  j["provenance"] = to_string(c.provenance);
  j["degree"] = c.d();
  Json coords = Json::array();
  for (const auto& x : c.coeffs.coords) coords.push_back(x.get_str());
  j["coeff_vector"] = std::move(coords);
  return j;
}

ChowPoint chow_point_from_json(const Json& j) {
  const ZPoly f = zpoly_from_json(j);
  const ChowProvenance prov =
      j.contains("provenance") ? provenance_from_string(j.at("provenance").get<std::string>()) : ChowProvenance::external;
  return ChowPoint::from_vector(coeff_vector(f), prov);
}

ZeroCycleInput zero_cycle_from_json(const Json& j) {
  ZeroCycleInput z;
  z.f = bigint_list(j, "f");
  z.h = bigint_list(j, "h");
  if (z.f.empty()) throw InputError("zero-cycle file needs a nonempty 'f'");
  return z;
}

Json to_json(const BoundReport& b) {
  Json j;
  j["s"] = b.params.s;
  j["d"] = b.params.d;
  j["r"] = b.params.r;
  j["n"] = b.params.n;
  j["N_n"] = b.N_n.get_str();
  j["N_d_minus_n"] = b.N_dn.get_str();
  j["N_d"] = b.N_d.get_str();
  j["deg_W"] = to_exact_string(b.deg_W);
  j["input_height"] = real_json(b.input_height);
  j["input_kind"] = b.input_is_cycle_height ? "cycle_height" : "chow_point_height";
  j["height_offset"] = real_json(b.offset);
  j["point_height"] = real_json(b.point_height);
  j["height_term"] = real_json(b.height_term);
  j["hW_bound"] = real_json(b.hW_bound);
  j["log2_term"] = real_json(b.log2_term);
  j["log2_term_dimension"] = "N_d";
  j["total"] = real_json(b.total);
  return j;
}

Json to_json(const DecompositionWitness& w) {
  Json j;
  j["p"] = w.p;
  j["k"] = w.k;
  j["modulus"] = w.field.modulus().coeffs();
  j["G"] = to_json(w.G);
  j["H"] = to_json(w.H);
  j["scalar"] = w.field.digits(w.scalar);
  return j;
}

Json to_json(const ScanReport& r) {
  Json j;
  j["instance"] = r.name;
  j["F"] = to_json(r.F);
  j["n"] = r.n;
  j["p_max"] = r.p_max;
  j["cost_cap"] = r.cost_cap;
  j["seed"] = r.seed;
  Json hyp;
  hyp["certified"] = r.hypothesis.found;
  if (r.hypothesis.found) hyp["prime"] = r.hypothesis.prime;
  hyp["rejected"] = prime_list(r.hypothesis.rejected);
  hyp["overridden"] = r.hypothesis_overridden;
  hyp["note"] = r.hypothesis.note;
  j["hypothesis"] = std::move(hyp);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["p"] = row.p;
    jr["decomposes"] = to_string(row.status);
    jr["k"] = row.k;
    if (row.witness) jr["witness"] = to_json(*row.witness);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["bad_reduction"] = prime_list(r.bad_reduction);
  j["reducible"] = prime_list(r.reducible);
  j["undetermined"] = prime_list(r.undetermined);
  j["log_product"] = real_json(r.log_product);
  j["chow_point"] = to_json(r.chow);
  j["h_K"] = real_json(r.hK);
  j["h_B"] = real_json(r.hB);
  j["bound"] = to_json(r.bound);
  j["margin"] = real_json(r.margin);
  j["verdict"] = to_string(r.verdict);
  return j;
}

std::string scan_csv(const ScanReport& r, const std::vector<std::string>& witness_files) {
  std::string out = "prime,decomposes,k,witness_file\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    out += std::to_string(row.p) + "," + to_string(row.status) + "," + std::to_string(row.k) + ",";
    if (i < witness_files.size()) out += witness_files[i];
    out += "\n";
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

}  // namespace chowbound
