#include "ccq/io.hpp"

#include <fstream>
#include <sstream>

#include "ccq/error.hpp"
#include "ccq/parse.hpp"
#include "json.hpp"

namespace ccq {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::size_t skip_ws(std::string_view t, std::size_t i) {
  while (i < t.size() && (t[i] == ' ' || t[i] == '\t' || t[i] == '\n' || t[i] == '\r')) ++i;
  return i;
}

std::size_t skip_string(std::string_view t, std::size_t i) {
  for (++i; i < t.size() && t[i] != '"'; ++i) {
    if (t[i] == '\\') ++i;
  }
  return i + 1;
}

// Offset of the opening quote of the string value at section.key (or its
// index-th element when index >= 0). Best effort: npos when not found.
std::size_t locate(std::string_view t, const std::string& section, const std::string& key, int index) {
  std::size_t at = t.find("\"" + section + "\"");
  if (at == std::string_view::npos) return at;
  at = t.find("\"" + key + "\"", at + section.size() + 2);
  if (at == std::string_view::npos) return at;
  at = t.find(':', at + key.size() + 2);
  if (at == std::string_view::npos) return at;
  at = skip_ws(t, at + 1);
  if (index < 0) return at < t.size() && t[at] == '"' ? at : std::string_view::npos;
  if (at >= t.size() || t[at] != '[') return std::string_view::npos;
  at = skip_ws(t, at + 1);
  for (int k = 0; k < index; ++k) {
    if (at >= t.size() || t[at] != '"') return std::string_view::npos;
    at = skip_ws(t, skip_string(t, at));
    if (at >= t.size() || t[at] != ',') return std::string_view::npos;
    at = skip_ws(t, at + 1);
  }
  return at < t.size() && t[at] == '"' ? at : std::string_view::npos;
}

Rational coeff_of(const json& c, const std::string& where) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const Error&) {
      fail(where + ": bad coefficient '" + c.get<std::string>() + "'");
    }
  }
  fail(where + ": coefficient must be an integer or a string");
}

int exponent_of(const json& e, const std::string& where) {
  if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 4096) {
    fail(where + ": exponent must be an integer in [0, 4096]");
  }
  return static_cast<int>(e.get<long long>());
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  BiPoly bipoly(const json& v, const std::string& section, const std::string& key, int index) {
    const std::string where = path(section, key, index);
    if (v.is_string()) {
      try {
        return parse_bipoly(v.get<std::string>());
      } catch (const PolyParseError& e) {
        string_error(e, section, key, index);
      }
    }
    if (!v.is_array()) fail(where + ": polynomial must be a string or an array of terms");
    std::vector<Term> terms;
    for (const auto& t : v) {
      if (!t.is_array() || t.size() != 3) fail(where + ": terms are [e1, e2, coeff]");
      terms.push_back({exponent_of(t[0], where), exponent_of(t[1], where), coeff_of(t[2], where)});
    }
    return BiPoly::from_terms(std::move(terms));
  }

  UniPoly unipoly(const json& v, const std::string& section, const std::string& key, int index) {
    const std::string where = path(section, key, index);
    if (v.is_string()) {
      try {
        return parse_unipoly(v.get<std::string>());
      } catch (const PolyParseError& e) {
        string_error(e, section, key, index);
      }
    }
    if (!v.is_array()) fail(where + ": polynomial must be a string or an array of terms");
    UniPoly p;
    for (const auto& t : v) {
      if (!t.is_array() || (t.size() != 2 && t.size() != 3)) fail(where + ": terms are [e, coeff]");
      if (t.size() == 3 && exponent_of(t[1], where) != 0) fail(where + ": x2 is not allowed here");
      p += UniPoly::monomial(coeff_of(t.back(), where), exponent_of(t[0], where));
    }
    return p;
  }

 private:
  static std::string path(const std::string& section, const std::string& key, int index) {
    return section + "." + key + (index >= 0 ? "[" + std::to_string(index) + "]" : "");
  }

  [[noreturn]] void string_error(const PolyParseError& e, const std::string& section, const std::string& key, int index) {
    const std::size_t at = locate(text_, section, key, index);
    if (at == std::string_view::npos) fail(path(section, key, index) + ": " + e.what());
    const auto [line, col] = line_col(text_, at + static_cast<std::size_t>(e.column()));
    fail("line " + std::to_string(line) + ", column " + std::to_string(col) + " (" + path(section, key, index) +
         "): " + e.message());
  }

  std::string_view text_;
};

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  if (!doc.is_object()) fail("top level must be an object");
  if (!doc.contains("curve") || !doc["curve"].is_object()) fail("missing object 'curve'");
  Reader rd(text);
  ProblemFile p;
  const json& c = doc["curve"];
  if (!c.contains("omega")) fail("curve.omega is required");
  p.curve.omega = rd.bipoly(c["omega"], "curve", "omega", -1);
  if (c.contains("rhos")) {
    if (!c["rhos"].is_array()) fail("curve.rhos must be an array");
    for (std::size_t i = 0; i < c["rhos"].size(); ++i) {
      p.curve.rhos.push_back(rd.bipoly(c["rhos"][i], "curve", "rhos", static_cast<int>(i)));
    }
  }
  p.curve.n = static_cast<int>(p.curve.rhos.size()) + 2;
  if (c.contains("n")) {
    if (!c["n"].is_number_integer()) fail("curve.n must be an integer");
    p.curve.n = c["n"].get<int>();
  }
  if (doc.contains("queries") && !doc["queries"].is_null()) {
    const json& q = doc["queries"];
    if (!q.is_object()) fail("queries must be an object");
    if (!q.contains("lambda")) fail("queries.lambda is required");
    ZeroDimParam z;
    z.n = p.curve.n;
    z.lambda = rd.unipoly(q["lambda"], "queries", "lambda", -1);
    if (q.contains("thetas")) {
      if (!q["thetas"].is_array()) fail("queries.thetas must be an array");
      for (std::size_t i = 0; i < q["thetas"].size(); ++i) {
        z.thetas.push_back(rd.unipoly(q["thetas"][i], "queries", "thetas", static_cast<int>(i)));
      }
    }
    p.queries = std::move(z);
  }
  if (doc.contains("options") && doc["options"].is_object()) {
    const json& o = doc["options"];
    if (o.contains("eps")) {
      const Rational eps = coeff_of(o["eps"], "options.eps");
      if (eps <= 0) fail("options.eps must be positive");
      p.eps = eps;
    }
    if (o.contains("dot")) {
      if (!o["dot"].is_string()) fail("options.dot must be a string");
      p.dot_path = o["dot"].get<std::string>();
    }
    if (o.contains("svg")) {
      if (!o["svg"].is_string()) fail("options.svg must be a string");
      p.svg_path = o["svg"].get<std::string>();
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string serialize_problem(const ProblemFile& p) {
  ordered_json doc;
  ordered_json& c = doc["curve"];
  c["n"] = p.curve.n;
  c["omega"] = to_string(p.curve.omega);
  c["rhos"] = ordered_json::array();
  for (const auto& r : p.curve.rhos) c["rhos"].push_back(to_string(r));
  if (p.queries) {
    ordered_json& q = doc["queries"];
    q["lambda"] = to_string(p.queries->lambda);
    q["thetas"] = ordered_json::array();
    for (const auto& t : p.queries->thetas) q["thetas"].push_back(to_string(t));
  }
  if (p.eps || p.dot_path || p.svg_path) {
    ordered_json& o = doc["options"];
    if (p.eps) o["eps"] = to_string(*p.eps);
    if (p.dot_path) o["dot"] = *p.dot_path;
    if (p.svg_path) o["svg"] = *p.svg_path;
  }
  return doc.dump(2) + "\n";
}

}  // namespace ccq
