#include "homnlie/docio.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace homnlie {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parse with duplicate-object-key rejection; nlohmann would silently keep
/// the last occurrence otherwise.
static json parse_json_strict(const std::string& text) {
  std::vector<std::set<std::string>> scopes;
  json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        scopes.emplace_back();
        break;
      case json::parse_event_t::object_end:
        scopes.pop_back();
        break;
      case json::parse_event_t::key: {
        auto key = parsed.get<std::string>();
        if (!scopes.back().insert(key).second)
          throw ParseError("duplicate key '" + key + "'");
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON syntax error: ") + e.what());
  }
}

static Rational parse_rational_field(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": coefficient must be a Rational string");
  auto r = Rational::parse(j.get<std::string>());
  if (!r) throw ParseError(where + ": '" + j.get<std::string>() + "' violates the Rational grammar");
  return *r;
}

static RMatrix parse_matrix(const json& j, int d, const std::string& where) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(d))
    throw ParseError(where + ": expected " + std::to_string(d) + " rows");
  RMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
      throw ParseError(where + " row " + std::to_string(i + 1) + ": expected " +
                       std::to_string(d) + " entries");
    for (int c = 0; c < d; ++c)
      m.at(i, c) = parse_rational_field(row[c], where + "[" + std::to_string(i + 1) + "][" +
                                                    std::to_string(c + 1) + "]");
  }
  return m;
}

static MultiIndex parse_bracket_key(const std::string& key, int arity, int dim) {
  MultiIndex idx;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t comma = key.find(',', pos);
    std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bracket key '" + key + "': bad index '" + part + "'");
    idx.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (idx.size() != static_cast<std::size_t>(arity))
    throw ParseError("bracket key '" + key + "': expected " + std::to_string(arity) + " indices");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > dim)
      throw ParseError("bracket key '" + key + "': index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw ParseError("bracket key '" + key + "': indices must be strictly increasing");
  }
  return idx;
}

HomNLieAlgebra parse_algebra_text(const std::string& text) {
  json j = parse_json_strict(text);
  if (!j.is_object()) throw ParseError("algebra document: expected a JSON object");

  std::string name = j.value("name", std::string{});
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ParseError("algebra document: 'dimension' must be an integer");
  if (!j.contains("arity") || !j["arity"].is_number_integer())
    throw ParseError("algebra document: 'arity' must be an integer");
  int d = j["dimension"].get<int>();
  int n = j["arity"].get<int>();
  if (d < 1) throw ParseError("algebra document: dimension must be positive");
  if (n < 2) throw ParseError("algebra document: arity must be at least 2");
  if (!j.contains("multiplicative") || !j["multiplicative"].is_boolean())
    throw ParseError("algebra document: 'multiplicative' must be a boolean");
  bool mult = j["multiplicative"].get<bool>();

  std::vector<LinearEndomorphism> twists;
  if (mult) {
    if (!j.contains("alpha")) throw ParseError("algebra document: multiplicative needs 'alpha'");
    RMatrix a = parse_matrix(j["alpha"], d, "alpha");
    twists.assign(n - 1, a);
  } else {
    if (!j.contains("twists")) throw ParseError("algebra document: expected 'twists'");
    const json& tw = j["twists"];
    if (!tw.is_array() || tw.size() != static_cast<std::size_t>(n - 1))
      throw ParseError("algebra document: expected arity-1 twist matrices");
    for (std::size_t i = 0; i < tw.size(); ++i)
      twists.push_back(parse_matrix(tw[i], d, "twists[" + std::to_string(i + 1) + "]"));
  }

  VectorTensor bracket(n, d);
  if (j.contains("bracket")) {
    const json& br = j["bracket"];
    if (!br.is_object()) throw ParseError("algebra document: 'bracket' must be an object");
    for (auto it = br.begin(); it != br.end(); ++it) {
      MultiIndex key = parse_bracket_key(it.key(), n, d);
      const json& rec = it.value();
      if (!rec.is_object())
        throw ParseError("bracket[" + it.key() + "]: expected a sparse coefficient record");
      RVector v(d);
      for (auto c = rec.begin(); c != rec.end(); ++c) {
        const std::string& ck = c.key();
        if (ck.empty() || ck.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("bracket[" + it.key() + "]: bad basis index '" + ck + "'");
        int bi = std::stoi(ck);
        if (bi < 1 || bi > d)
          throw ParseError("bracket[" + it.key() + "]: basis index out of range");
        v[bi - 1] = parse_rational_field(c.value(), "bracket[" + it.key() + "][" + ck + "]");
      }
      bracket.set(key, v);
    }
  }
  return HomNLieAlgebra(name, d, n, std::move(bracket), std::move(twists), mult);
}

HomNLieAlgebra parse_algebra_file(const std::string& path) {
  return parse_algebra_text(read_file(path));
}

static ordered_json matrix_json(const RMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

static std::string key_string(const MultiIndex& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s;
}

std::string emit_algebra(const HomNLieAlgebra& alg) {
  ordered_json j;
  j["name"] = alg.name();
  j["dimension"] = alg.dim();
  j["arity"] = alg.arity();
  j["multiplicative"] = alg.multiplicative_declared();
  if (alg.multiplicative_declared())
    j["alpha"] = matrix_json(alg.alpha());
  else {
    ordered_json tw = ordered_json::array();
    for (const auto& t : alg.twists()) tw.push_back(matrix_json(t));
    j["twists"] = std::move(tw);
  }
  ordered_json br = ordered_json::object();
  for (const auto& [key, val] : alg.bracket().entries()) {
    ordered_json rec = ordered_json::object();
    for (std::size_t i = 0; i < val.size(); ++i)
      if (!val[i].is_zero()) rec[std::to_string(i + 1)] = val[i].str();
    br[key_string(key)] = std::move(rec);
  }
  j["bracket"] = std::move(br);
  return j.dump(2) + "\n";
}

static RVector parse_coefficients(const json& j, int expected_len, const std::string& what) {
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
    throw ParseError(what + ": expected a 'coefficients' array");
  const json& arr = j["coefficients"];
  if (arr.size() != static_cast<std::size_t>(expected_len))
    throw ParseError(what + ": expected " + std::to_string(expected_len) + " coefficients");
  RVector v(expected_len);
  for (int i = 0; i < expected_len; ++i)
    v[i] = parse_rational_field(arr[i], what + ".coefficients[" + std::to_string(i + 1) + "]");
  return v;
}

TraceForm parse_trace_text(const std::string& text, int expected_dim) {
  return TraceForm(parse_coefficients(parse_json_strict(text), expected_dim, "trace document"));
}

TraceForm parse_trace_file(const std::string& path, int expected_dim) {
  return parse_trace_text(read_file(path), expected_dim);
}

std::string emit_trace(const TraceForm& tau) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  for (const auto& c : tau.coefficients) arr.push_back(c.str());
  j["coefficients"] = std::move(arr);
  return j.dump(2) + "\n";
}

static json cochain_values(const std::string& text, int degree, const char* kind) {
  json j = parse_json_strict(text);
  if (!j.is_object()) throw ParseError("cochain document: expected a JSON object");
  if (j.value("degree", 0) != degree)
    throw ParseError("cochain document: expected degree " + std::to_string(degree));
  if (j.value("coefficients", std::string{}) != kind)
    throw ParseError(std::string("cochain document: expected coefficients '") + kind + "'");
  if (!j.contains("values") || !j["values"].is_object())
    throw ParseError("cochain document: expected a 'values' object");
  return j["values"];
}

ScalarTensor parse_scalar_cochain_text(const std::string& text, int arity, int dim) {
  json vals = cochain_values(text, 2, "scalar");
  ScalarTensor t(arity, dim);
  for (auto it = vals.begin(); it != vals.end(); ++it) {
    MultiIndex key = parse_bracket_key(it.key(), arity, dim);
    t.set(key, parse_rational_field(it.value(), "values[" + it.key() + "]"));
  }
  return t;
}

ScalarTensor parse_scalar_cochain_file(const std::string& path, int arity, int dim) {
  return parse_scalar_cochain_text(read_file(path), arity, dim);
}

std::string emit_scalar_cochain(const ScalarTensor& t) {
  ordered_json j;
  j["degree"] = 2;
  j["coefficients"] = "scalar";
  ordered_json vals = ordered_json::object();
  for (const auto& [key, val] : t.entries()) vals[key_string(key)] = val.str();
  j["values"] = std::move(vals);
  return j.dump(2) + "\n";
}

VectorTensor parse_adjoint_cochain_text(const std::string& text, int arity, int dim) {
  json vals = cochain_values(text, 2, "adjoint");
  VectorTensor t(arity, dim);
  for (auto it = vals.begin(); it != vals.end(); ++it) {
    MultiIndex key = parse_bracket_key(it.key(), arity, dim);
    const json& rec = it.value();
    if (!rec.is_object()) throw ParseError("values[" + it.key() + "]: expected a sparse record");
    RVector v(dim);
    for (auto c = rec.begin(); c != rec.end(); ++c) {
      int bi = std::stoi(c.key());
      if (bi < 1 || bi > dim) throw ParseError("values[" + it.key() + "]: index out of range");
      v[bi - 1] = parse_rational_field(c.value(), "values[" + it.key() + "][" + c.key() + "]");
    }
    t.set(key, v);
  }
  return t;
}

VectorTensor parse_adjoint_cochain_file(const std::string& path, int arity, int dim) {
  return parse_adjoint_cochain_text(read_file(path), arity, dim);
}

RVector parse_lambda_text(const std::string& text, int expected_len) {
  return parse_coefficients(parse_json_strict(text), expected_len, "lambda document");
}

RVector parse_lambda_file(const std::string& path, int expected_len) {
  return parse_lambda_text(read_file(path), expected_len);
}

}  // namespace homnlie
