#pragma once
// JSON encodings of exact values: a GoldenNumber is {"a":[num,den],"b":[num,den]},
// complex and tower values nest it.

#include <json.hpp>

#include "spinindex/golden.hpp"
#include "spinindex/quatmat.hpp"

namespace spinindex {

using Json = nlohmann::ordered_json;

Json rational_to_json(const BigRational& x);
BigRational rational_from_json(const Json& j);

Json to_json(const GoldenNumber& x);
Json to_json(const GoldenComplex& x);
Json to_json(const QuadExtNumber& x);
Json to_json(const GoldenQuaternion& q);

GoldenNumber golden_from_json(const Json& j);
GoldenComplex golden_complex_from_json(const Json& j);
QuadExtNumber quadext_from_json(const Json& j);
GoldenQuaternion quaternion_from_json(const Json& j);

/// [[a, b], [c, d]] with quaternion entries.
Json to_json(const SpinMatrix4<GoldenNumber>& x);
SpinMatrix4<GoldenNumber> spin_matrix4_from_json(const Json& j);
Json to_json(const SpinMatrix2<GoldenComplex>& x);
SpinMatrix2<GoldenComplex> spin_matrix2_from_json(const Json& j);

template <class T, std::size_t N>
Json to_json(const SquareMatrix<T, N>& x) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < N; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < N; ++k) row.push_back(to_json(x(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace spinindex
