#include "okdh/io.hpp"

#include <fstream>
#include <sstream>

#include "okdh/okounkov.hpp"

namespace okdh {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path + "." + key + ": missing field");
  return *it;
}

long integer_field(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    Rational q;
    try {
      q = parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  }
  throw ValidationError(path + ": expected an integer, got " + j.dump());
}

RationalVector vector_from_json(const Json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array, got " + j.dump());
  if (j.size() != dim) {
    throw ValidationError(path + ": expected " + std::to_string(dim) + " entries, got " +
                          std::to_string(j.size()));
  }
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return v;
}

IntegerVector integer_vector(const Json& j, const std::string& path, std::size_t dim) {
  IntegerVector out;
  const auto v = vector_from_json(j, path, dim);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) {
      throw ValidationError(path + "[" + std::to_string(i) + "]: expected an integer, got " +
                            to_string(v[i]));
    }
    out.push_back(v[i].get_num());
  }
  return out;
}

FlagMap flag_from_json(const Json& j, const std::string& path, std::size_t d) {
  const Json& mat = field(j, "matrix", path);
  if (!mat.is_array() || mat.size() != d) {
    throw ValidationError(path + ".matrix: expected " + std::to_string(d) + " rows");
  }
  FlagMap f;
  for (std::size_t i = 0; i < d; ++i) {
    f.matrix.push_back(integer_vector(mat[i], path + ".matrix[" + std::to_string(i) + "]", d));
  }
  if (j.contains("translation")) {
    f.translation = integer_vector(j["translation"], path + ".translation", d);
  } else {
    f.translation.assign(d, 0);
  }
  return f;
}

template <class T>
std::string join(const std::vector<T>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }
  throw ValidationError(path + ": expected a rational string \"p/q\", got " + j.dump());
}

Json rational_json(const Rational& q) { return to_string(q); }

Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

ToricModel model_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("model")) return model_from_json(doc["model"]);
  const std::string path = "model";
  const Json& type = field(doc, "type", path);
  const long d = integer_field(field(doc, "d", path), path + ".d");
  if (d < 1) throw ValidationError(path + ".d: must be >= 1, got " + std::to_string(d));
  const auto dim = static_cast<std::size_t>(d);
  if (type == "projective") {
    const long k = integer_field(field(doc, "k", path), path + ".k");
    if (k < 1) throw ValidationError(path + ".k: must be >= 1, got " + std::to_string(k));
    auto base = ToricModel::projective_space(static_cast<int>(d), static_cast<int>(k));
    if (!doc.contains("flag_map")) return base;
    return ToricModel::from_polytope(base.polytope(), flag_from_json(doc["flag_map"], path + ".flag_map", dim));
  }
  if (type != "polytope") {
    throw ValidationError(path + ".type: expected \"projective\" or \"polytope\", got " + type.dump());
  }
  RationalPolytope p = RationalPolytope::empty(dim);
  if (doc.contains("vertices")) {
    const Json& vs = doc["vertices"];
    if (!vs.is_array() || vs.empty()) throw ValidationError(path + ".vertices: expected a nonempty array");
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      pts.push_back(vector_from_json(vs[i], path + ".vertices[" + std::to_string(i) + "]", dim));
    }
    p = RationalPolytope::from_vrep(dim, std::move(pts));
  } else if (doc.contains("hrep")) {
    const Json& hs = doc["hrep"];
    if (!hs.is_array() || hs.empty()) throw ValidationError(path + ".hrep: expected a nonempty array");
    std::vector<Inequality> ineqs;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const std::string hp = path + ".hrep[" + std::to_string(i) + "]";
      ineqs.push_back({vector_from_json(field(hs[i], "a", hp), hp + ".a", dim),
                       rational_from_json(field(hs[i], "b", hp), hp + ".b")});
    }
    try {
      p = RationalPolytope::from_hrep(dim, std::move(ineqs));
    } catch (const UnboundedPolytopeError& e) {
      throw ValidationError(path + ".hrep: " + e.what());
    }
  } else {
    throw ValidationError(path + ": polytope models need \"vertices\" or \"hrep\"");
  }
  FlagMap flag = doc.contains("flag_map") ? flag_from_json(doc["flag_map"], path + ".flag_map", dim)
                                          : FlagMap::identity(dim);
  try {
    return ToricModel::from_polytope(p, std::move(flag));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json model_to_json(const ToricModel& model) {
  Json j;
  j["type"] = "polytope";
  j["d"] = model.dim();
  Json vs = Json::array();
  for (const auto& v : model.polytope().vertices()) vs.push_back(vector_json(v));
  j["vertices"] = std::move(vs);
  Json mat = Json::array();
  for (const auto& row : model.flag_map().matrix) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    mat.push_back(std::move(r));
  }
  Json tr = Json::array();
  for (const auto& x : model.flag_map().translation) tr.push_back(x.get_str());
  j["flag_map"] = {{"matrix", std::move(mat)}, {"translation", std::move(tr)}};
  return j;
}

WeightFiltration filtration_from_json(const Json& doc, const ToricModel& model) {
  if (doc.is_object() && doc.contains("filtration")) return filtration_from_json(doc["filtration"], model);
  const std::string path = "filtration";
  const Json& ps = field(doc, "pieces", path);
  if (!ps.is_array() || ps.empty()) throw ValidationError(path + ".pieces: expected a nonempty array");
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string pp = path + ".pieces[" + std::to_string(i) + "]";
    pieces.push_back({vector_from_json(field(ps[i], "a", pp), pp + ".a", model.dim()),
                      ps[i].contains("b") ? rational_from_json(ps[i]["b"], pp + ".b") : Rational(0)});
  }
  try {
    return WeightFiltration(model, std::move(pieces));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json filtration_to_json(const WeightFiltration& filt) {
  Json ps = Json::array();
  for (const auto& p : filt.pieces()) ps.push_back({{"a", vector_json(p.slope)}, {"b", rational_json(p.offset)}});
  return {{"pieces", std::move(ps)}};
}

Json polytope_json(const RationalPolytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(vector_json(v));
  j["vertices"] = std::move(vs);
  std::vector<Inequality> hrep;
  for (const auto& h : p.hrep()) hrep.push_back(h.normalized());
  std::sort(hrep.begin(), hrep.end());
  hrep.erase(std::unique(hrep.begin(), hrep.end()), hrep.end());
  Json hs = Json::array();
  for (const auto& h : hrep) hs.push_back({{"a", vector_json(h.normal)}, {"b", rational_json(h.rhs)}});
  j["hrep"] = std::move(hs);
  j["volume"] = rational_json(volume(p));
  return j;
}

Json polynomial_json(const Polynomial& p) {
  return {{"coefficients", vector_json(p.coefficients())}, {"text", p.to_string()}};
}

Json piecewise_json(const PiecewisePolynomial& p) {
  Json pieces = Json::array();
  for (std::size_t i = 0; i < p.pieces.size(); ++i) {
    Json piece = polynomial_json(p.pieces[i]);
    piece["lo"] = rational_json(p.breakpoints[i]);
    piece["hi"] = rational_json(p.breakpoints[i + 1]);
    pieces.push_back(std::move(piece));
  }
  return {{"breakpoints", vector_json(p.breakpoints)}, {"pieces", std::move(pieces)}};
}

Json measure_json(const DiscreteMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms()) atoms.push_back({{"location", rational_json(a.location)}, {"mass", rational_json(a.mass)}});
  return {{"kind", "discrete"},
          {"atoms", std::move(atoms)},
          {"total_mass", rational_json(m.total_mass())},
          {"expectation", rational_json(m.expectation())}};
}

Json measure_json(const PiecewisePolyMeasure& m) {
  Json j{{"kind", "piecewise_polynomial"}, {"density", piecewise_json(m.density())}};
  if (m.atom()) {
    j["atom"] = {{"location", rational_json(m.atom()->location)}, {"mass", rational_json(m.atom()->mass)}};
  } else {
    j["atom"] = nullptr;
  }
  j["total_mass"] = rational_json(m.total_mass());
  j["expectation"] = rational_json(m.expectation());
  return j;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw InvariantViolation("csv row width mismatch");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string s = join(header_) + "\n";
  for (const auto& r : rows_) s += join(r) + "\n";
  return s;
}

CsvTable convergence_csv(const std::vector<SweepRow>& rows) {
  CsvTable t({"m", "E_nu_m", "E_nu_m_decimal", "kolmogorov", "kolmogorov_decimal"});
  for (const auto& r : rows) {
    t.add_row({std::to_string(r.m), to_string(r.expectation), to_decimal(r.expectation),
               to_string(r.kolmogorov), to_decimal(r.kolmogorov)});
  }
  return t;
}

CsvTable restricted_volume_csv(const DivisorData& div, const RationalVector& ts) {
  CsvTable table({"t", "t_decimal", "vol_L_minus_tE", "vol_L_minus_tE_decimal", "restricted_vol",
                  "restricted_vol_decimal", "nu_density", "nu_density_decimal"});
  const auto vol = volume_function(div);
  const auto section = restricted_volume_function(div);
  const auto nu = limit_measure_nu(div.filtration());
  const Rational a_max = div.filtration().a_max_limit();
  for (const auto& t : ts) {
    if (t < 0 || t > a_max) {
      throw ValidationError("t = " + to_string(t) + " outside [0, " + to_string(a_max) + "]");
    }
    const Rational r = section.pieces[section.piece_index(t)](t);
    if (t < a_max && r != restricted_volume(div, t)) {
      throw InvariantViolation("restricted volume routes disagree at t = " + to_string(t));
    }
    // density of the closed-interval piece; at a_max take the left piece
    Rational dens = 0;
    if (!nu.density().pieces.empty()) {
      const auto& bp = nu.breakpoints();
      std::size_t i = t < a_max ? nu.density().piece_index(t) : bp.size() - 2;
      dens = nu.density().pieces[i](t);
    }
    const Rational v = vol(t);
    table.add_row({to_string(t), to_decimal(t), to_string(v), to_decimal(v), to_string(r),
                   to_decimal(r), to_string(dens), to_decimal(dens)});
  }
  return table;
}

}  // namespace okdh
