#include "json_io.hpp"

#include "picard/errors.hpp"

namespace picard::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j) {
  Integer v = integer_from_json(j);
  if (v < 0 || v > 100000) throw ParseError("size out of range");
  return static_cast<std::size_t>(v);
}

bool is_two_term_shape(const BoundedComplex& k) { return k.lo() == -1 && k.length() == 2; }

}  // namespace

Json to_json(const Integer& x) { return to_string(x); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const Invariants& inv) {
  Json factors = Json::array();
  for (const auto& f : inv.factors) factors.push_back(to_json(f));
  return Json{{"free_rank", inv.free_rank}, {"factors", std::move(factors)}};
}

Json to_json(const FgAbGroup& g) { return Json{{"rank", g.ambient_rank()}, {"relations", to_json(g.relations())}}; }

Json to_json(const GroupHom& f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"matrix", to_json(f.matrix())}};
}

Json to_json(const BoundedComplex& k) {
  if (is_two_term_shape(k))
    return Json{{"deg_minus1", to_json(k.at(-1))}, {"deg0", to_json(k.at(0))}, {"d", to_json(k.d(-1).matrix())}};
  Json comps = Json::array(), diffs = Json::array();
  for (int n = k.lo(); n <= k.hi(); ++n) {
    comps.push_back(to_json(k.at(n)));
    if (n < k.hi()) diffs.push_back(to_json(k.d(n).matrix()));
  }
  return Json{{"lo", k.lo()}, {"components", std::move(comps)}, {"differentials", std::move(diffs)}};
}

Json to_json(const ChainMap& f, bool bare) {
  Json j;
  if (is_two_term_shape(f.source())) {
    j = Json{{"f_minus1", to_json(f.at(-1).matrix())}, {"f0", to_json(f.at(0).matrix())}};
  } else {
    Json maps = Json::array();
    for (int n = f.source().lo(); n <= f.source().hi(); ++n) maps.push_back(to_json(f.at(n).matrix()));
    j = Json{{"lo", f.source().lo()}, {"maps", std::move(maps)}};
  }
  if (!bare) {
    j["source"] = to_json(f.source());
    j["target"] = to_json(f.target());
  }
  return j;
}

Json to_json(const DerivedHomGroup& g) {
  Json gens = Json::array();
  for (const ChainMap& f : g.representatives()) gens.push_back(to_json(f, true));
  return Json{{"degree", g.degree()},
              {"source", to_json(g.source())},
              {"target", to_json(g.target())},
              {"invariants", to_json(g.group().invariants())},
              {"relations", to_json(g.group().relations())},
              {"generators", std::move(gens)}};
}

Json to_json(const Extension& e) {
  return Json{{"k", to_json(e.k())}, {"l", to_json(e.l())}, {"m", to_json(e.m())},
              {"i", to_json(e.i(), true)}, {"j", to_json(e.j(), true)}};
}

Json to_json(const ExtClass& x) {
  const DerivedHomGroup& a = x.ambient();
  Json ambient{{"degree", a.degree()},
               {"source", to_json(a.source())},
               {"target", to_json(a.target())},
               {"invariants", to_json(a.group().invariants())},
               {"relations", to_json(a.group().relations())}};
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(to_json(c));
  return Json{{"ambient", std::move(ambient)}, {"coords", std::move(coords)}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not a decimal integer: \"" + j.get<std::string>() + "\"");
    }
  }
  throw ParseError("expected an integer or a decimal string");
}

IntMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = size_from_json(field(j, "rows"));
  const std::size_t cols = size_from_json(field(j, "cols"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) throw ParseError("matrix entries do not match rows");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) throw ParseError("matrix row does not match cols");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(entries[r][c]);
  }
  return m;
}

FgAbGroup group_from_json(const Json& j) {
  if (j.is_object() && j.contains("orders")) {
    const Json& orders = j["orders"];
    if (!orders.is_array()) throw ParseError("\"orders\" must be an array");
    std::vector<Vector> cols;
    const std::size_t n = orders.size();
    for (std::size_t g = 0; g < n; ++g) {
      Integer o = integer_from_json(orders[g]);
      if (o < 0) throw ParseError("negative cyclic order");
      if (o == 0) continue;
      Vector col = zero_vector(n);
      col[g] = o;
      cols.push_back(col);
    }
    return FgAbGroup(n, IntMatrix::from_columns(n, cols));
  }
  const std::size_t rank = size_from_json(field(j, "rank"));
  IntMatrix rel = matrix_from_json(field(j, "relations"));
  if (rel.rows() != rank) throw ParseError("relations have the wrong number of rows");
  return FgAbGroup(rank, rel);
}

GroupHom hom_from_json(const Json& j) {
  return GroupHom(group_from_json(field(j, "source")), group_from_json(field(j, "target")),
                  matrix_from_json(field(j, "matrix")));
}

TwoTermComplex complex_from_json(const Json& j) {
  return TwoTermComplex(group_from_json(field(j, "deg_minus1")), group_from_json(field(j, "deg0")),
                        matrix_from_json(field(j, "d")));
}

ChainMap chain_map_from_json(const Json& j) {
  return chain_map_from_json(j, complex_from_json(field(j, "source")), complex_from_json(field(j, "target")));
}

ChainMap chain_map_from_json(const Json& j, const TwoTermComplex& source, const TwoTermComplex& target) {
  return ChainMap(source, target, matrix_from_json(field(j, "f_minus1")), matrix_from_json(field(j, "f0")));
}

Extension extension_from_json(const Json& j) {
  TwoTermComplex k = complex_from_json(field(j, "k"));
  TwoTermComplex l = complex_from_json(field(j, "l"));
  TwoTermComplex m = complex_from_json(field(j, "m"));
  return validate_extension(chain_map_from_json(field(j, "i"), k, l), chain_map_from_json(field(j, "j"), l, m));
}

ExtClass ext_class_from_json(const Json& j) {
  const Json& a = field(j, "ambient");
  if (integer_from_json(field(a, "degree")) != 1) throw ParseError("extension class ambient must have degree 1");
  auto amb = ext1_ambient(complex_from_json(field(a, "source")), complex_from_json(field(a, "target")));
  if (!(matrix_from_json(field(a, "relations")) == amb->group().relations()))
    throw AmbientMismatch("stored presentation of Ext^1 differs from the computed one");
  const Json& cs = field(j, "coords");
  if (!cs.is_array()) throw ParseError("\"coords\" must be an array");
  Vector coords;
  for (const auto& c : cs) coords.push_back(integer_from_json(c));
  return ExtClass(amb, coords);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace picard::io
