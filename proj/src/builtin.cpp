#include "okdh/builtin.hpp"

namespace okdh {

namespace {

AffinePiece piece(RationalVector a, long b = 0) { return {std::move(a), Rational(b)}; }

std::vector<BuiltinExample> make_examples() {
  std::vector<BuiltinExample> out;
  auto add = [&](std::string name, std::string desc, ToricModel model,
                 std::vector<AffinePiece> pieces, bool divisorial) {
    out.push_back({std::move(name), std::move(desc),
                   WeightFiltration(std::move(model), std::move(pieces)), divisorial});
  };
  add("p1-point", "P^1, O(1); order of vanishing at a point, w = x1",
      ToricModel::projective_space(1, 1), {piece({1})}, true);
  add("p2-line", "P^2, O(1); order of vanishing along a line, w = x1",
      ToricModel::projective_space(2, 1), {piece({1, 0})}, true);
  add("p2o2-line", "P^2, O(2); order of vanishing along a line, w = x1",
      ToricModel::projective_space(2, 2), {piece({1, 0})}, true);
  add("p2-min", "P^2, O(1); w = min(x1, x2)",
      ToricModel::projective_space(2, 1), {piece({1, 0}), piece({0, 1})}, false);
  add("hirzebruch-ray", "F_1 trapezoid conv{(0,0),(2,0),(0,1),(1,1)}; ray divisor, w = x2",
      ToricModel::hirzebruch(1, 1), {piece({0, 1})}, true);
  add("square-blowup", "P^1 x P^1; exceptional divisor over a fixed point, w = x1 + x2",
      ToricModel::product(ToricModel::projective_space(1, 1), ToricModel::projective_space(1, 1)),
      {piece({1, 1})}, true);
  return out;
}

}  // namespace

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> examples = make_examples();
  return examples;
}

const BuiltinExample& builtin_example(std::string_view name) {
  std::string known;
  for (const auto& e : builtin_examples()) {
    if (e.name == name) return e;
    known += (known.empty() ? "" : ", ") + e.name;
  }
  throw ValidationError("unknown builtin example '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace okdh
