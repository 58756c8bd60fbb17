#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cactus/io.hpp"

using namespace cactus;

TEST_CASE("field and model descriptors") {
  CHECK(parse_field("q") == Field::rationals());
  CHECK(parse_field("fp:3") == Field::prime(3));
  CHECK_THROWS_AS(parse_field("fp:4"), ParseError);
  CHECK_THROWS_AS(parse_field("float"), ParseError);

  Field q = Field::rationals();
  CHECK(parse_model("twisted-binary:c=1", q) == Model::twisted_binary(1, q));
  CHECK(parse_model("ambient-product:n1=1,n2=2", q) == Model::ambient_product(1, 2, q));
  CHECK(parse_model("single-projective:n=2", q) == Model::single_projective(2, q));
  CHECK_THROWS_AS(parse_model("weighted:w=2", q), ParseError);
  CHECK_THROWS_AS(parse_model("ambient-product:n1=1", q), ParseError);
  CHECK(parse_bidegree("3,1") == Bidegree{3, 1});
  CHECK_THROWS_AS(parse_bidegree("3"), ParseError);
}

TEST_CASE("functional files parse against the model and bidegree") {
  Field q = Field::rationals();
  Model tb = Model::twisted_binary(1, q);
  Bidegree deg{5, 1};

  Functional p = parse_functional(R"([{"x":[6,0],"y":[],"c":"1"}])", tb, deg);
  CHECK(p.coeff(0).is_one());
  CHECK(p.coeff(1).is_zero());

  Functional two = parse_functional(
      R"([{"x":[6,0],"y":[],"c":"1"},{"x":[0,6],"y":[],"c":"1"}])", tb, deg);
  CHECK(two.coeff(0).is_one());
  CHECK(two.coeff(6).is_one());

  // duplicate monomials accumulate
  Functional dup = parse_functional(
      R"([{"x":[6,0],"c":"1"},{"x":[6,0],"c":"2"}])", tb, deg);
  CHECK(dup.coeff(0) == Scalar::from_int(q, 3));

  CHECK_THROWS_WITH_AS(parse_functional(R"([{"x":[5,0],"y":[],"c":"1"}])", tb, deg),
                       "term 1: exponents do not match bidegree 5,1", ParseError);
  CHECK_THROWS_AS(parse_functional(R"([{"x":[6,0],"c":"1"},{"x":[6,0],"c":"-1"}])",
                                   tb, deg),
                  ParseError);
  CHECK_THROWS_AS(parse_functional("not json", tb, deg), ParseError);

  Model ap = Model::ambient_product(1, 1, q);
  Functional segre = parse_functional(
      R"([{"x":[1,0],"y":[1,0],"c":"1"},{"x":[0,1],"y":[0,1],"c":"1"}])", ap, {1, 1});
  CHECK(segre.coeff(0).is_one());
  CHECK(segre.coeff(3).is_one());
}

TEST_CASE("canonical functional emission round-trips byte for byte") {
  Field q = Field::rationals();
  Model tb = Model::twisted_binary(1, q);
  Bidegree deg{5, 1};
  std::string canonical =
      R"([{"x":[6,0],"y":[],"c":"1"},{"x":[3,3],"y":[],"c":"-2/3"},{"x":[0,6],"y":[],"c":"5"}])";
  Functional p = parse_functional(canonical, tb, deg);
  CHECK(emit_functional(p) == canonical);
  CHECK(emit_functional(parse_functional(emit_functional(p), tb, deg)) == canonical);
}

TEST_CASE("point files") {
  Field f5 = Field::prime(5);
  Model ap = Model::ambient_product(1, 1, f5);
  auto pts = parse_points(R"([{"x":[1,0],"y":[1,4]},{"x":[0,1],"y":[1,0]}])", ap);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].beta[1].residue() == 4);
  CHECK_THROWS_AS(parse_points(R"([{"x":[1,0]}])", ap), ParseError);
}

TEST_CASE("cone files") {
  std::string text =
      "# quadrant\n"
      "2\n"
      "1 0\n"
      "0 1\n"
      "1 1\n"
      "2 3\n";
  ConeFile file = parse_cone_file(text);
  CHECK(file.cone.rho() == 2);
  CHECK(file.cone.dual_generators().size() == 2);
  CHECK(file.d0 == ZVec{2, 3});
  CHECK(file.cone.min_coeff(file.d0) == 2);

  CHECK_THROWS_AS(parse_cone_file("2\n1 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cone_file("2\n1 0\n1 1\n2 3\n"), ParseError);  // not pointed
}

TEST_CASE("certificate records round-trip") {
  Field q = Field::rationals();
  Model tb = Model::twisted_binary(1, q);
  TheoremParams params{2, 1, 5, 3};
  DecompositionCertificate cert{3, 2,
                                RingElement(tb, {2, 0},
                                            {Scalar::zero(q), Scalar::one(q),
                                             Scalar::zero(q)}),
                                true};
  std::string text = emit_certificate(q, params, cert);
  CertificateFile parsed = parse_certificate(text);
  CHECK(parsed.field == q);
  CHECK(parsed.params.r == 2);
  CHECK(parsed.params.k == 3);
  CHECK(parsed.cert.k0 == 3);
  CHECK(parsed.cert.r0 == 2);
  CHECK(parsed.cert.span_ok);
  CHECK(parsed.cert.witness == cert.witness);
  CHECK(emit_certificate(parsed.field, parsed.params, parsed.cert) == text);

  CHECK_THROWS_AS(parse_certificate("certificate\nfield: q\n"), ParseError);
}
