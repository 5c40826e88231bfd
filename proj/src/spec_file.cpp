#include "mckay/spec_file.hpp"

#include <cctype>

#include "json.hpp"

#include "mckay/error.hpp"
#include "mckay/families.hpp"

namespace mckay {

namespace {

using nlohmann::json;

// Recursive-descent parser for entry tokens.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | integer ['/' integer] | 'z' ['^' ['-'] integer] | '(' expr ')'
class TokenParser {
 public:
  TokenParser(std::string_view text, unsigned conductor) : text_(text), m_(conductor) {}

  CycNum parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty entry");
    CycNum value = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("column " + std::to_string(pos_ + 1), message + " in \"" +
                                                               std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  CycNum expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    CycNum value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  CycNum term() {
    CycNum value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  CycNum factor() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of entry");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      CycNum inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      long k = 1;
      if (accept('^')) {
        const bool negative = accept('-');
        mpz_class e = integer();
        if (!e.fits_slong_p()) fail("exponent too large");
        k = e.get_si();
        if (negative) k = -k;
      }
      return CycNum::zeta(m_, k);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return CycNum(m_, q);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  unsigned m_;
  std::size_t pos_ = 0;
};

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

CycNum parse_entry(const json& value, unsigned conductor, const std::string& where) {
  try {
    if (value.is_string()) return parse_cyc_token(value.get<std::string>(), conductor);
    if (value.is_number_integer()) return CycNum(conductor, Rational(value.get<long>()));
    if (value.is_array()) {
      // Coordinate form: [[num, den], ...] of length phi(conductor).
      const unsigned phi = euler_phi(conductor);
      if (value.size() != phi) {
        throw ParseError(where, "coordinate list needs " + std::to_string(phi) + " pairs, got " +
                                    std::to_string(value.size()));
      }
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i < value.size(); ++i) {
        const json& pair = value[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
          throw ParseError(where + "[" + std::to_string(i) + "]",
                           "expected an integer pair [numerator, denominator]");
        }
        const long den = pair[1].get<long>();
        if (den <= 0) {
          throw ParseError(where + "[" + std::to_string(i) + "]", "denominator must be positive");
        }
        Rational q(pair[0].get<long>(), den);
        q.canonicalize();
        coeffs.push_back(q);
      }
      return CycNum(conductor, std::move(coeffs));
    }
  } catch (const ParseError& e) {
    if (e.where().rfind(where, 0) == 0) throw;
    throw ParseError(where + " " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
  throw ParseError(where, "entry must be a token string, an integer or a coordinate list");
}

CycMatrix parse_matrix(const json& value, unsigned conductor, std::size_t dim,
                       const std::string& where, const std::string& label) {
  if (!value.is_array()) throw ParseError(where, label + " must be a list of rows");
  const std::size_t rows = value.size();
  std::size_t cols = dim;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!value[r].is_array()) throw ParseError(where + "[" + std::to_string(r) + "]", "row must be a list");
    if (value[r].size() != dim) cols = value[r].size();
  }
  if (rows != dim || cols != dim) {
    throw ParseError(where, label + " is " + std::to_string(rows) + "x" + std::to_string(cols) +
                                ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  CycMatrix m(dim, dim, conductor);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = parse_entry(value[r][c], conductor,
                            where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

std::size_t positive_integer(const json& doc, const char* key, const std::string& where) {
  const json& v = doc.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw ParseError(where, std::string(key) + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::optional<CycMatrix> GroupSpecFile::effective_omega() const {
  if (omega_disabled) return std::nullopt;
  if (omega) return omega;
  if (dim % 2 == 0 && dim > 0) return standard_symplectic_blocks(dim / 2, conductor);
  return std::nullopt;
}

CycNum parse_cyc_token(std::string_view token, unsigned conductor) {
  return TokenParser(token, conductor).parse();
}

GroupSpecFile parse_group_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_col(text, e.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "conductor" && key != "dim" && key != "omega" &&
        key != "generators" && key != "caps") {
      throw ParseError(key, "unknown field");
    }
  }
  for (const char* key : {"conductor", "dim", "generators"}) {
    if (!doc.contains(key)) throw ParseError(key, "missing required field");
  }

  GroupSpecFile spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name", "must be a string");
    spec.name = doc["name"].get<std::string>();
  }
  spec.conductor = static_cast<unsigned>(positive_integer(doc, "conductor", "conductor"));
  spec.dim = positive_integer(doc, "dim", "dim");

  const json& gens = doc["generators"];
  if (!gens.is_array()) throw ParseError("generators", "must be a list of matrices");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    spec.generators.push_back(parse_matrix(gens[i], spec.conductor, spec.dim,
                                           "generators[" + std::to_string(i) + "]",
                                           "generator " + std::to_string(i)));
  }

  if (doc.contains("omega")) {
    if (doc["omega"].is_null()) {
      spec.omega_disabled = true;
    } else {
      spec.omega = parse_matrix(doc["omega"], spec.conductor, spec.dim, "omega", "omega");
      try {
        validate_symplectic_form(*spec.omega);
      } catch (const PreconditionError& e) {
        throw ParseError("omega", e.what());
      }
    }
  }

  if (doc.contains("caps")) {
    const json& caps = doc["caps"];
    if (!caps.is_object()) throw ParseError("caps", "must be an object");
    for (const auto& [key, _] : caps.items()) {
      if (key == "max_group_order") {
        spec.caps.max_group_order = positive_integer(caps, "max_group_order", "caps.max_group_order");
      } else if (key == "max_element_order") {
        spec.caps.max_element_order =
            positive_integer(caps, "max_element_order", "caps.max_element_order");
      } else {
        throw ParseError("caps." + key, "unknown field");
      }
    }
  }
  return spec;
}

FiniteMatrixGroup build_group(const GroupSpecFile& spec) {
  return close_generators(spec.generators, spec.effective_omega(), spec.caps);
}

}  // namespace mckay
