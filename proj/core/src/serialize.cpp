#include "hskein/serialize.hpp"

#include <optional>

#include <nlohmann/json.hpp>

#include "hskein/error.hpp"

namespace hskein {

using nlohmann::json;

namespace {

// True if s has a top-level '+' or '-' that is not a leading sign or an
// exponent sign.
bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^') return true;
  }
  return false;
}

std::string coeff_text(const Scalar& c, bool pretty) {
  std::string s = pretty ? c.to_pretty_string() : c.to_string();
  if (has_top_level_sum(s)) s = "(" + s + ")";
  return s;
}

// Appends one term to out, choosing the separator from the sign of the
// coefficient. body is empty for constant terms.
void append_term(std::string& out, const Scalar& c, const std::string& body, bool pretty) {
  std::string coeff = coeff_text(c, pretty);
  bool negative = false;
  if (!coeff.empty() && coeff[0] == '-' && !has_top_level_sum(coeff.substr(1))) {
    negative = true;
    coeff.erase(0, 1);
  }
  std::string term;
  if (body.empty())
    term = coeff;
  else if (coeff == "1")
    term = body;
  else
    term = coeff + (pretty ? "*" : " * ") + body;
  if (out.empty())
    out = negative ? "-" + term : term;
  else
    out += (negative ? " - " : " + ") + term;
}

std::string element_text(Basis b, const Partition& p) { return std::string(basis_name(b)) + p.to_string(); }

std::string tuple_body(const PartitionTuple& t, const std::vector<Basis>& bases) {
  bool trivial = true;
  for (const Partition& p : t) trivial = trivial && p.empty();
  if (trivial) return "";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += " | ";
    out += element_text(bases[i], t[i]);
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <class T>
T get_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + name + "': " + e.what());
  }
}

json tuple_json(const PartitionTuple& t) {
  json out = json::array();
  for (const Partition& p : t) out.push_back(p.parts());
  return out;
}

PartitionTuple tuple_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "tuple must be an array of partitions");
  PartitionTuple t;
  for (const json& p : j) {
    if (p.is_string()) {
      t.push_back(Partition::parse(p.get<std::string>()));
      continue;
    }
    try {
      t.emplace_back(p.get<std::vector<int>>());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  return t;
}

json bases_json(const std::vector<Basis>& bases) {
  json out = json::array();
  for (Basis b : bases) out.push_back(std::string(basis_name(b)));
  return out;
}

std::vector<Basis> bases_from_json(const json& j, int rank) {
  if (!j.contains("bases")) return std::vector<Basis>(static_cast<std::size_t>(rank), Basis::W);
  std::vector<Basis> out;
  for (const auto& b : get_field<std::vector<std::string>>(j, "bases")) out.push_back(parse_basis(b));
  if (static_cast<int>(out.size()) != rank) throw Error(ErrorCode::ParseError, "bases length differs from rank");
  return out;
}

}  // namespace

std::string to_text(const SkeinElem<Scalar>& x, bool pretty) {
  std::string out;
  for (const auto& [p, c] : x.terms()) append_term(out, c, p.empty() ? "" : element_text(x.basis(), p), pretty);
  return out.empty() ? "0" : out;
}

std::string to_text(const TensorSeries<Scalar>& x, bool pretty) {
  std::string out;
  for (const auto& [key, c] : x.terms()) {
    std::string body = tuple_body(key.tuple, x.bases());
    if (x.rank() == 0 && key.degree > 0) body = key.degree == 1 ? "t" : "t^" + std::to_string(key.degree);
    append_term(out, c, body, pretty);
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const RelElem<Scalar>& x, bool pretty) {
  const std::vector<Basis> bases(static_cast<std::size_t>(x.rank()), Basis::P);
  std::string out;
  for (const auto& [key, c] : x.terms()) {
    std::string body = tuple_body(key.tuple, bases);
    if (key.c > 0) {
      const std::string cp = key.c == 1 ? "c" : "c^" + std::to_string(key.c);
      body = body.empty() ? cp : cp + " * " + body;
    }
    append_term(out, c, body, pretty);
  }
  return out.empty() ? "0" : out;
}

SkeinElem<Scalar> parse_skein_text(std::string_view text) {
  // Split into signed terms at top-level '+' and '-'.
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool negative = false;
  int depth = 0, bracket = 0;
  auto flush = [&]() {
    const auto first = cur.find_first_not_of(' ');
    if (first == std::string::npos) {
      if (!terms.empty() || negative) throw Error(ErrorCode::ParseError, "empty term in '" + std::string(text) + "'");
      return;
    }
    cur = cur.substr(first, cur.find_last_not_of(' ') - first + 1);
    terms.emplace_back(negative, cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '[') ++bracket;
    if (ch == ']') --bracket;
    const bool exponent_sign = i > 0 && text[i - 1] == '^';
    if (depth == 0 && bracket == 0 && (ch == '+' || ch == '-') && !exponent_sign) {
      if (cur.find_first_not_of(' ') != std::string::npos) flush();
      else if (!terms.empty() || negative) throw Error(ErrorCode::ParseError, "dangling sign in '" + std::string(text) + "'");
      negative = ch == '-';
      continue;
    }
    cur += ch;
  }
  flush();
  if (terms.empty()) throw Error(ErrorCode::ParseError, "empty skein element");

  std::optional<SkeinElem<Scalar>> out;
  for (const auto& [neg, term] : terms) {
    Basis b = out ? out->basis() : Basis::W;
    Partition p;
    std::string coeff = term;
    const auto close = term.rfind(']');
    if (close != std::string::npos) {
      if (close + 1 != term.size()) throw Error(ErrorCode::ParseError, "trailing text after basis element in '" + term + "'");
      const auto open = term.rfind('[');
      if (open == std::string::npos || open == 0) throw Error(ErrorCode::ParseError, "malformed basis element '" + term + "'");
      b = parse_basis(std::string_view(term).substr(open - 1, 1));
      p = Partition::parse(term.substr(open));
      coeff = term.substr(0, open - 1);
      while (!coeff.empty() && (coeff.back() == ' ' || coeff.back() == '*')) coeff.pop_back();
      if (coeff.empty()) coeff = "1";
    }
    Scalar c = Scalar::parse(coeff);
    if (neg) c = -c;
    if (!out) out = SkeinElem<Scalar>(b);
    auto piece = SkeinElem<Scalar>::basis_element(b, p, c);
    *out += basis_convert(piece, out->basis());
  }
  return *out;
}

std::string to_json(const SkeinElem<Scalar>& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms()) terms.push_back(json::array({p.parts(), c.to_string()}));
  return json{{"basis", std::string(basis_name(x.basis()))}, {"terms", terms}}.dump();
}

std::string to_json(const TensorSeries<Scalar>& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back({{"tuple", tuple_json(key.tuple)}, {"degree", key.degree}, {"coeff", c.to_string()}});
  return json{{"rank", x.rank()}, {"truncation", x.truncation()}, {"bases", bases_json(x.bases())}, {"terms", terms}}
      .dump();
}

std::string to_json(const RelElem<Scalar>& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back({{"c", key.c}, {"tuple", tuple_json(key.tuple)}, {"coeff", c.to_string()}});
  const std::vector<Basis> bases(static_cast<std::size_t>(x.rank()), Basis::P);
  return json{{"rank", x.rank()}, {"truncation", x.truncation()}, {"bases", bases_json(bases)}, {"terms", terms}}
      .dump();
}

SkeinElem<Scalar> parse_skein_json(std::string_view text) {
  const json j = parse_json(text);
  const Basis b = parse_basis(get_field<std::string>(j, "basis"));
  SkeinElem<Scalar> out(b);
  for (const json& t : get_field<json>(j, "terms")) {
    if (!t.is_array() || t.size() != 2) throw Error(ErrorCode::ParseError, "skein term must be [partition, coeff]");
    const PartitionTuple tuple = tuple_from_json(json::array({t[0]}));
    out.add_term(tuple[0], Scalar::parse(t[1].get<std::string>()));
  }
  return out;
}

TensorSeries<Scalar> parse_series_json(std::string_view text) {
  const json j = parse_json(text);
  const int rank = get_field<int>(j, "rank");
  const int truncation = get_field<int>(j, "truncation");
  if (rank < 0 || truncation < 0) throw Error(ErrorCode::ParseError, "rank and truncation must be non-negative");
  TensorSeries<Scalar> out(rank, truncation, bases_from_json(j, rank));
  for (const json& t : get_field<json>(j, "terms")) {
    const PartitionTuple tuple = tuple_from_json(get_field<json>(t, "tuple"));
    if (static_cast<int>(tuple.size()) != rank) throw Error(ErrorCode::RankMismatch, "tuple length differs from rank");
    const int degree = t.contains("degree") ? get_field<int>(t, "degree") : 0;
    out.add_term(tuple, Scalar::parse(get_field<std::string>(t, "coeff")), rank == 0 ? degree : 0);
  }
  return out;
}

RelElem<Scalar> parse_rel_json(std::string_view text) {
  const json j = parse_json(text);
  const int rank = get_field<int>(j, "rank");
  const int truncation = get_field<int>(j, "truncation");
  if (rank < 1 || truncation < 0) throw Error(ErrorCode::ParseError, "relative elements need rank >= 1");
  const std::vector<Basis> bases = bases_from_json(j, rank);
  for (Basis b : bases)
    if (b != bases[0]) throw Error(ErrorCode::ParseError, "relative elements use one basis for all factors");
  RelElem<Scalar> out(rank, truncation);
  for (const json& t : get_field<json>(j, "terms")) {
    const PartitionTuple tuple = tuple_from_json(get_field<json>(t, "tuple"));
    if (static_cast<int>(tuple.size()) != rank) throw Error(ErrorCode::RankMismatch, "tuple length differs from rank");
    out.add_term_in_basis(get_field<int>(t, "c"), tuple, Scalar::parse(get_field<std::string>(t, "coeff")), bases[0]);
  }
  return out;
}

bool json_is_relative(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) return false;
  for (const json& t : j["terms"])
    if (t.is_object() && t.contains("c")) return true;
  return false;
}

}  // namespace hskein
