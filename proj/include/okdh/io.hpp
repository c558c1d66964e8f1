#pragma once

// File formats. Every rational is written as a "p/q" string (integers as
// "p"); readers also accept JSON integers. Loader errors are ValidationErrors
// naming the JSON path of the offending field.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "okdh/filtration.hpp"
#include "okdh/measure.hpp"
#include "okdh/restricted_volume.hpp"

namespace okdh {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);

/// {"type": "projective", "d", "k"} or {"type": "polytope", "d",
/// "vertices" | "hrep", "flag_map"?}. A document carrying a "model" key is
/// read through that key, so every file the CLI writes can be fed back in.
ToricModel model_from_json(const Json& doc);
Json model_to_json(const ToricModel& model);

/// {"pieces": [{"a": [...], "b": "..."}]}, or a document with a
/// "filtration" key.
WeightFiltration filtration_from_json(const Json& doc, const ToricModel& model);
Json filtration_to_json(const WeightFiltration& filt);

Json rational_json(const Rational& q);
Json vector_json(const RationalVector& v);
Rational rational_from_json(const Json& j, const std::string& path);

/// {"dim", "vertices", "hrep", "volume"}; vertices sorted lexicographically.
Json polytope_json(const RationalPolytope& p);
Json polynomial_json(const Polynomial& p);
Json piecewise_json(const PiecewisePolynomial& p);
Json measure_json(const DiscreteMeasure& m);
Json measure_json(const PiecewisePolyMeasure& m);

/// Minimal CSV table; cells never contain commas or quotes.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CsvTable convergence_csv(const std::vector<SweepRow>& rows);
CsvTable restricted_volume_csv(const DivisorData& div, const RationalVector& ts);

}  // namespace okdh
