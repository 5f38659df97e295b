#include "rrm/reference.hpp"

#include <stdexcept>

namespace rrm {

namespace {

ReferenceTable make_standard() {
  ReferenceTable t;
  t.model = ModelSpec::standard();
  t.n_min = 4;
  t.n_max = 20;
  t.levels = 4;
  t.cells = {
      {"4.934874810", "19.75077640", "51.06512518", "100.2492235"},
      {"4.934802217", "19.75077640", "44.58681182", "100.2492235"},
      {"4.934802217", "19.73923669", "44.58681182", "79.99595777"},
      {"4.934802200", "19.73923669", "44.41473408", "79.99595777"},
      {"4.934802200", "19.73920882", "44.41473408", "78.97848206"},
      {"4.934802200", "19.73920882", "44.41322468", "78.97848206"},
      {"4.934802200", "19.73920880", "44.41322468", "78.95700917"},
      {"4.934802200", "19.73920880", "44.41321981", "78.95700917"},
      {"4.934802200", "19.73920880", "44.41321981", "78.95683586"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683586"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683521"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683521"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683520"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683520"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683520"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683520"},
      {"4.934802200", "19.73920880", "44.41321980", "78.95683520"},
  };
  return t;
}

ReferenceTable make_projected_1() {
  ReferenceTable t;
  t.model = ModelSpec::projected(1);
  t.n_min = 1;
  t.n_max = 6;
  t.levels = 1;
  t.cells = {
      {"4.927671482"}, {"4.927671482"}, {"4.934799721"},
      {"4.934799721"}, {"4.934802200"}, {"4.934802200"},
  };
  return t;
}

ReferenceTable make_projected_2() {
  ReferenceTable t;
  t.model = ModelSpec::projected(2);
  t.n_min = 2;
  t.n_max = 10;
  t.levels = 2;
  t.cells = {
      {"4.927671482", "19.40270646"},
      {"4.934799721", "19.40270646"},
      {"4.934799721", "19.73799899"},
      {"4.934802200", "19.73799899"},
      {"4.934802200", "19.73920734"},
      {"4.934802200", "19.73920734"},
      {"4.934802200", "19.73920880"},
      {"4.934802200", "19.73920880"},
      {"4.934802200", "19.73920880"},
  };
  return t;
}

ReferenceTable make_projected_3() {
  ReferenceTable t;
  t.model = ModelSpec::projected(3);
  t.n_min = 3;
  t.n_max = 13;
  t.levels = 3;
  t.cells = {
      {"4.934799541", "19.40270646", "41.72191568"},
      {"4.934799541", "19.73799899", "41.72191568"},
      {"4.934802200", "19.73799899", "44.37877225"},
      {"4.934802200", "19.73920734", "44.37877225"},
      {"4.934802200", "19.73920734", "44.41306667"},
      {"4.934802200", "19.73920880", "44.41306667"},
      {"4.934802200", "19.73920880", "44.41321950"},
      {"4.934802200", "19.73920880", "44.41321950"},
      {"4.934802200", "19.73920880", "44.41321980"},
      {"4.934802200", "19.73920880", "44.41321980"},
      {"4.934802200", "19.73920880", "44.41321980"},
  };
  return t;
}

ReferenceTable make_weighted() {
  ReferenceTable t;
  t.model = ModelSpec::weighted({Rational(1), Rational(2), Rational(3)});
  t.n_min = 4;
  t.n_max = 14;
  t.levels = 3;
  t.cells = {
      {"0.9999994479", "1.999877421", "2.818209291"},
      {"0.9999999999", "1.999877421", "2.997673155"},
      {"0.9999999999", "1.999999852", "2.997673155"},
      {"0.9999999999", "1.999999852", "2.999989656"},
      {"0.9999999999", "1.999999999", "2.999989656"},
      {"0.9999999999", "1.999999999", "2.999999979"},
      {"0.9999999999", "1.999999999", "2.999999979"},
      {"0.9999999999", "1.999999999", "2.999999999"},
      {"1.0000000000", "1.999999999", "2.999999999"},
      {"1.0000000000", "1.999999999", "2.999999999"},
      {"1.0000000000", "1.999999999", "2.999999999"},
  };
  return t;
}

}  // namespace

const ReferenceTable& reference_standard() {
  static const ReferenceTable t = make_standard();
  return t;
}

const ReferenceTable& reference_projected(unsigned d) {
  static const ReferenceTable t1 = make_projected_1();
  static const ReferenceTable t2 = make_projected_2();
  static const ReferenceTable t3 = make_projected_3();
  switch (d) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
  }
  throw std::invalid_argument("reference_projected: only D = 1, 2, 3 are tabulated");
}

const ReferenceTable& reference_weighted123() {
  static const ReferenceTable t = make_weighted();
  return t;
}

std::vector<const ReferenceTable*> all_reference_tables() {
  return {&reference_standard(), &reference_projected(1), &reference_projected(2),
          &reference_projected(3), &reference_weighted123()};
}

std::vector<TableMismatch> compare_to_reference(const ConvergenceTable& table,
                                                const ReferenceTable& ref,
                                                const PrecisionContext& ctx) {
  std::vector<TableMismatch> mismatches;
  const BigReal tol = ctx.pow10(-9) * ctx.from_long(5);

  for (const auto& row : table.rows) {
    if (row.basis_size < ref.n_min || row.basis_size > ref.n_max) continue;
    const auto& expected = ref.cells.at(row.basis_size - ref.n_min);

    const unsigned expected_nulls =
        ref.model.kind == ModelKind::kStandard
            ? 0
            : row.basis_size - std::min(ref.model.rank, row.basis_size);
    if (row.null_count != expected_nulls)
      mismatches.push_back({row.basis_size, 0, std::to_string(expected_nulls),
                            std::to_string(row.null_count)});

    for (unsigned k = 0; k < expected.size() && k < row.values.size(); ++k) {
      const BigReal ref_value = ctx.from_rational(Rational::from_decimal(expected[k]));
      const BigReal rel = abs(row.values[k] - ref_value) / abs(ref_value);
      if (rel > tol)
        mismatches.push_back(
            {row.basis_size, k + 1, expected[k], row.values[k].to_scientific(12)});
    }
    if (row.values.size() < expected.size())
      mismatches.push_back({row.basis_size, static_cast<unsigned>(row.values.size()) + 1,
                            expected[row.values.size()], "(missing)"});
  }
  return mismatches;
}

std::vector<TableMismatch> run_reference_regression(const ReferenceTable& ref,
                                                    const PrecisionContext& ctx) {
  const ConvergenceTable table = build_table(ref.model, ref.n_min, ref.n_max, ref.levels, ctx);
  return compare_to_reference(table, ref, ctx);
}

}  // namespace rrm
