#pragma once

#include <string>
#include <vector>

#include "cactus/cones.hpp"
#include "cactus/oracle.hpp"

namespace cactus {

// Malformed input files and descriptors; the CLI maps this to a usage error.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Field descriptors: "q" for the rationals, "fp:<p>" for a prime field.
Field parse_field(const std::string& text);

// Model descriptors: "twisted-binary:c=1", "ambient-product:n1=1,n2=2",
// "single-projective:n=2".
Model parse_model(const std::string& text, const Field& field);

// "d,e" pairs.
Bidegree parse_bidegree(const std::string& text);

// Functional files are JSON arrays of terms
//   {"x": [exponents of the alpha block], "y": [beta block], "c": "coeff"},
// with exponent sums matching the requested bidegree.  Duplicate monomials
// accumulate.  The zero functional is rejected.
Functional parse_functional(const std::string& json_text, const Model& model,
                            Bidegree bidegree);
Functional read_functional(const std::string& path, const Model& model,
                           Bidegree bidegree);
// Canonical form: terms in basis order, coefficients as strings, compact.
std::string emit_functional(const Functional& f);

// Point files are JSON arrays of {"x": [...], "y": [...]} coordinate tuples.
std::vector<ProjectivePoint> parse_points(const std::string& json_text,
                                          const Model& model);
std::vector<ProjectivePoint> read_points(const std::string& path, const Model& model);

// Cone files are whitespace tables: the first non-comment line is the
// lattice rank rho; every following line is a row of rho integers.  The last
// two rows are H and D0; all earlier rows are dual cone generators.
struct ConeFile {
  ConeSpec cone;
  ZVec d0;
};
ConeFile parse_cone_file(const std::string& text);
ConeFile read_cone_file(const std::string& path);

// Certificate records serialize as a fixed-order text block: field, params,
// the witness coefficient list, k0, r0, span_ok.
std::string emit_certificate(const Field& field, const TheoremParams& params,
                             const DecompositionCertificate& cert);
struct CertificateFile {
  Field field;
  TheoremParams params;
  DecompositionCertificate cert;
};
CertificateFile parse_certificate(const std::string& text);
CertificateFile read_certificate(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace cactus
