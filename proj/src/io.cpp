#include "cactus/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cactus {

namespace {

using ordered_json = nlohmann::ordered_json;

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("cannot parse " + what + ": '" + text + "'");
  }
}

std::vector<int> json_int_list(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError(what + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Scalar json_coeff(const ordered_json& j, const Field& field) {
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(field, j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("coefficient must be an integer or a string");
}

int block_degree(const std::vector<int>& exps, const std::string& what) {
  int total = 0;
  for (int e : exps) {
    if (e < 0) throw ParseError(what + " has a negative exponent");
    total += e;
  }
  return total;
}

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) {
    long p = parse_long(text.substr(3), "field characteristic");
    try {
      return Field::prime(p);
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field '" + text + "' (use q or fp:<prime>)");
}

namespace {

// "key1=v1,key2=v2" with a fixed key list.
std::vector<long> parse_kv(const std::string& text, const std::vector<std::string>& keys) {
  std::vector<long> values;
  std::stringstream ss(text);
  std::string item;
  std::size_t at = 0;
  while (std::getline(ss, item, ',')) {
    if (at >= keys.size()) throw ParseError("too many model parameters in '" + text + "'");
    std::string prefix = keys[at] + "=";
    if (item.rfind(prefix, 0) != 0) {
      throw ParseError("expected " + keys[at] + "=<int> in '" + text + "'");
    }
    values.push_back(parse_long(item.substr(prefix.size()), keys[at]));
    ++at;
  }
  if (values.size() != keys.size()) {
    throw ParseError("missing model parameters in '" + text + "'");
  }
  return values;
}

}  // namespace

Model parse_model(const std::string& text, const Field& field) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (name == "twisted-binary") {
      auto v = parse_kv(args, {"c"});
      return Model::twisted_binary(static_cast<int>(v[0]), field);
    }
    if (name == "ambient-product") {
      auto v = parse_kv(args, {"n1", "n2"});
      return Model::ambient_product(static_cast<int>(v[0]), static_cast<int>(v[1]), field);
    }
    if (name == "single-projective") {
      auto v = parse_kv(args, {"n"});
      return Model::single_projective(static_cast<int>(v[0]), field);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown model '" + name + "'");
}

Bidegree parse_bidegree(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError("bidegree must be '<i>,<j>': '" + text + "'");
  }
  return Bidegree{
      static_cast<int>(parse_long(text.substr(0, comma), "bidegree")),
      static_cast<int>(parse_long(text.substr(comma + 1), "bidegree"))};
}

Functional parse_functional(const std::string& json_text, const Model& model,
                            Bidegree bidegree) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("functional file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("functional file must be a JSON array of terms");
  if (model.piece_dim(bidegree) == 0) {
    throw ParseError("piece " + bidegree.to_string() + " is zero in this model");
  }

  Functional f(model, bidegree);
  int alpha_deg, beta_deg;
  switch (model.kind()) {
    case ModelKind::TwistedBinary:
      alpha_deg = bidegree.i + model.param1() * bidegree.j;
      beta_deg = 0;
      break;
    case ModelKind::SingleProjective:
      alpha_deg = bidegree.i;
      beta_deg = 0;
      break;
    case ModelKind::AmbientProduct:
    default:
      alpha_deg = bidegree.i;
      beta_deg = bidegree.j;
      break;
  }

  std::size_t line = 0;
  for (const auto& term : doc) {
    ++line;
    std::string where = "term " + std::to_string(line);
    if (!term.is_object() || !term.contains("c")) {
      throw ParseError(where + ": expected an object with 'x', 'y', 'c'");
    }
    Monomial m;
    m.alpha = term.contains("x") ? json_int_list(term["x"], where + " 'x'")
                                 : std::vector<int>{};
    m.beta = term.contains("y") ? json_int_list(term["y"], where + " 'y'")
                                : std::vector<int>{};
    if (static_cast<int>(m.alpha.size()) != model.alpha_vars()) {
      throw ParseError(where + ": 'x' must have " +
                       std::to_string(model.alpha_vars()) + " exponents");
    }
    if (static_cast<int>(m.beta.size()) != model.beta_vars()) {
      throw ParseError(where + ": 'y' must have " +
                       std::to_string(model.beta_vars()) + " exponents");
    }
    if (block_degree(m.alpha, where) != alpha_deg ||
        block_degree(m.beta, where) != beta_deg) {
      throw ParseError(where + ": exponents do not match bidegree " +
                       bidegree.to_string());
    }
    long idx = model.monomial_index(bidegree, m);
    if (idx < 0) throw ParseError(where + ": monomial not in piece");
    f.coeff(idx) += json_coeff(term["c"], model.field());
  }
  if (f.is_zero()) throw ParseError("functional is zero");
  return f;
}

Functional read_functional(const std::string& path, const Model& model,
                           Bidegree bidegree) {
  return parse_functional(read_text_file(path), model, bidegree);
}

std::string emit_functional(const Functional& f) {
  const Model& model = f.model();
  auto basis = model.piece_basis(f.bidegree());
  ordered_json doc = ordered_json::array();
  for (std::size_t u = 0; u < basis.size(); ++u) {
    if (f.coeff(u).is_zero()) continue;
    ordered_json term;
    term["x"] = basis[u].alpha;
    term["y"] = basis[u].beta;
    term["c"] = f.coeff(u).to_string();
    doc.push_back(std::move(term));
  }
  return doc.dump();
}

std::vector<ProjectivePoint> parse_points(const std::string& json_text,
                                          const Model& model) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("points file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("points file must be a JSON array");
  std::vector<ProjectivePoint> points;
  std::size_t line = 0;
  for (const auto& entry : doc) {
    ++line;
    std::string where = "point " + std::to_string(line);
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    ProjectivePoint pt;
    auto read_block = [&](const char* key, int expected) {
      Vec out;
      if (entry.contains(key)) {
        for (const auto& c : entry[key]) out.push_back(json_coeff(c, model.field()));
      }
      if (static_cast<int>(out.size()) != expected) {
        throw ParseError(where + ": '" + key + "' must have " +
                         std::to_string(expected) + " coordinates");
      }
      return out;
    };
    pt.alpha = read_block("x", model.alpha_vars());
    pt.beta = read_block("y", model.beta_vars());
    points.push_back(std::move(pt));
  }
  return points;
}

std::vector<ProjectivePoint> read_points(const std::string& path, const Model& model) {
  return parse_points(read_text_file(path), model);
}

ConeFile parse_cone_file(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.size() < 4 || rows[0].size() != 1) {
    throw ParseError("cone file needs a rank line, generator rows, an H row and a D0 row");
  }
  int rho = static_cast<int>(parse_long(rows[0][0], "lattice rank"));
  auto to_zvec = [&](const std::vector<std::string>& row, std::size_t at) {
    if (static_cast<int>(row.size()) != rho) {
      throw ParseError("row " + std::to_string(at + 1) + " must have " +
                       std::to_string(rho) + " integers");
    }
    ZVec v;
    for (const std::string& s : row) {
      mpz_class z;
      if (z.set_str(s, 10) != 0) throw ParseError("bad integer '" + s + "'");
      v.push_back(std::move(z));
    }
    return v;
  };
  std::vector<ZVec> gens;
  for (std::size_t t = 1; t + 2 < rows.size(); ++t) gens.push_back(to_zvec(rows[t], t));
  ZVec h = to_zvec(rows[rows.size() - 2], rows.size() - 2);
  ZVec d0 = to_zvec(rows[rows.size() - 1], rows.size() - 1);
  try {
    return ConeFile{ConeSpec(rho, std::move(gens), std::move(h)), std::move(d0)};
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

ConeFile read_cone_file(const std::string& path) {
  return parse_cone_file(read_text_file(path));
}

std::string emit_certificate(const Field& field, const TheoremParams& params,
                             const DecompositionCertificate& cert) {
  std::ostringstream os;
  os << "certificate\n";
  os << "field: " << field.to_string() << "\n";
  os << "params: r=" << params.r << " c=" << params.c << " d=" << params.d
     << " k=" << params.k << "\n";
  os << "g:";
  for (const Scalar& c : cert.witness.coeffs()) os << " " << c.to_string();
  os << "\n";
  os << "k0: " << cert.k0 << "\n";
  os << "r0: " << cert.r0 << "\n";
  os << "span_ok: " << (cert.span_ok ? "true" : "false") << "\n";
  return os.str();
}

CertificateFile parse_certificate(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next = [&](const std::string& prefix) {
    if (!std::getline(is, line) || line.rfind(prefix, 0) != 0) {
      throw ParseError("certificate record missing '" + prefix + "'");
    }
    return line.substr(prefix.size());
  };
  next("certificate");
  Field field = parse_field(next("field: "));
  // params line has the fixed shape r=A c=B d=C k=D
  std::istringstream ps(next("params: "));
  TheoremParams params;
  std::string tok;
  while (ps >> tok) {
    if (tok.size() < 3 || tok[1] != '=') throw ParseError("bad params entry '" + tok + "'");
    int value = static_cast<int>(parse_long(tok.substr(2), "params"));
    switch (tok[0]) {
      case 'r': params.r = value; break;
      case 'c': params.c = value; break;
      case 'd': params.d = value; break;
      case 'k': params.k = value; break;
      default: throw ParseError("bad params entry '" + tok + "'");
    }
  }

  std::istringstream gs(next("g:"));
  Vec coeffs;
  while (gs >> tok) coeffs.push_back(Scalar::parse(field, tok));
  if (coeffs.empty()) throw ParseError("certificate witness is empty");

  DecompositionCertificate cert{
      static_cast<int>(parse_long(next("k0: "), "k0")),
      static_cast<int>(parse_long(next("r0: "), "r0")),
      RingElement(Model::twisted_binary(params.c, field),
                  Bidegree{static_cast<int>(coeffs.size()) - 1, 0}, coeffs),
      next("span_ok: ") == "true"};
  return CertificateFile{field, params, std::move(cert)};
}

CertificateFile read_certificate(const std::string& path) {
  return parse_certificate(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cactus
