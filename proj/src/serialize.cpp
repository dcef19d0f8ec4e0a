#include "spinindex/serialize.hpp"

#include "spinindex/error.hpp"

namespace spinindex {

namespace {

BigRational integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

std::string integer_text(const mpz_class& z) { return z.get_str(); }

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return integer_text(z);
}

}  // namespace

Json rational_to_json(const BigRational& x) {
  return Json::array({integer_to_json(x.get_num()), integer_to_json(x.get_den())});
}

BigRational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [num, den], got " + j.dump());
  const BigRational num = integer_from_json(j[0]);
  const BigRational den = integer_from_json(j[1]);
  if (sgn(den) == 0) throw DivisionByZero();
  BigRational r = num / den;
  r.canonicalize();
  return r;
}

Json to_json(const GoldenNumber& x) {
  return Json{{"a", rational_to_json(x.a())}, {"b", rational_to_json(x.b())}};
}

Json to_json(const GoldenComplex& x) { return Json{{"re", to_json(x.re())}, {"im", to_json(x.im())}}; }

Json to_json(const QuadExtNumber& x) {
  return Json{{"base", to_json(x.base())}, {"ext", to_json(x.ext())}, {"radicand", to_json(x.radicand())}};
}

Json to_json(const GoldenQuaternion& q) {
  return Json::array({to_json(q.q0), to_json(q.q1), to_json(q.q2), to_json(q.q3)});
}

GoldenNumber golden_from_json(const Json& j) {
  if (j.is_string()) return GoldenNumber::parse(j.get<std::string>());
  if (j.is_number_integer()) return GoldenNumber(j.get<long>());
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw ParseError("expected {\"a\":[n,d],\"b\":[n,d]}, got " + j.dump());
  }
  return {rational_from_json(j.at("a")), rational_from_json(j.at("b"))};
}

GoldenComplex golden_complex_from_json(const Json& j) {
  if (j.is_object() && j.contains("re")) {
    return {golden_from_json(j.at("re")), j.contains("im") ? golden_from_json(j.at("im")) : GoldenNumber()};
  }
  return {golden_from_json(j)};
}

QuadExtNumber quadext_from_json(const Json& j) {
  if (j.is_object() && j.contains("base")) {
    return {golden_from_json(j.at("base")), golden_from_json(j.at("ext")), golden_from_json(j.at("radicand"))};
  }
  return {golden_from_json(j)};
}

GoldenQuaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("expected a quaternion [q0,q1,q2,q3], got " + j.dump());
  return {golden_from_json(j[0]), golden_from_json(j[1]), golden_from_json(j[2]), golden_from_json(j[3])};
}

Json to_json(const SpinMatrix4<GoldenNumber>& x) {
  return Json::array({Json::array({to_json(x.a), to_json(x.b)}), Json::array({to_json(x.c), to_json(x.d)})});
}

SpinMatrix4<GoldenNumber> spin_matrix4_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2) {
    throw ParseError("expected a 2x2 quaternion matrix [[a,b],[c,d]]");
  }
  return {quaternion_from_json(j[0][0]), quaternion_from_json(j[0][1]), quaternion_from_json(j[1][0]),
          quaternion_from_json(j[1][1])};
}

Json to_json(const SpinMatrix2<GoldenComplex>& x) {
  return Json::array({Json::array({to_json(x.a), to_json(x.b)}), Json::array({to_json(x.c), to_json(x.d)})});
}

SpinMatrix2<GoldenComplex> spin_matrix2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2) {
    throw ParseError("expected a 2x2 complex matrix [[a,b],[c,d]]");
  }
  return {golden_complex_from_json(j[0][0]), golden_complex_from_json(j[0][1]), golden_complex_from_json(j[1][0]),
          golden_complex_from_json(j[1][1])};
}

}  // namespace spinindex
