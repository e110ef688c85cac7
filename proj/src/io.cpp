#include "menon/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"
#include "menon/errors.hpp"

namespace menon::io {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

long long parse_ll(const std::string& text, const char* what) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError(std::string(what) + ": empty number");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not an integer: '" + text + "'");
  }
  if (pos != t.size())
    throw ParseError(std::string(what) + ": trailing characters in '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

} // namespace

FieldDesc parse_field(const std::string& text) {
  std::string t = trim(text);
  if (t == "Q") return make_rational_field();
  const std::string prefix = "Q(sqrt";
  if (t.size() > prefix.size() + 1 && t.rfind(prefix, 0) == 0 && t.back() == ')') {
    std::string inner = t.substr(prefix.size(), t.size() - prefix.size() - 1);
    long long D = parse_ll(inner, "field discriminant");
    try {
      return make_quadratic_field(D);
    } catch (const DomainError& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field must be 'Q' or 'Q(sqrt D)', got '" + text + "'");
}

std::string field_to_string(const FieldDesc& K) {
  if (K.is_rational()) return "Q";
  return "Q(sqrt " + std::to_string(K.D) + ")";
}

/*
 * Elements are written as a sum of an integer part and a w-part:
 * "5", "1+2w", "-3w", "2-w".  A bare "w" carries coefficient 1.
 */
Element parse_element(const FieldDesc& K, const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("element: empty text");
  // split into signed terms
  std::vector<std::string> terms;
  std::string cur;
  for (size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if ((c == '+' || c == '-') && i > 0) {
      terms.push_back(cur);
      cur.clear();
    }
    if (!isspace((unsigned char)c)) cur += c;
  }
  terms.push_back(cur);
  long long x = 0, y = 0;
  for (const std::string& term : terms) {
    if (term.empty()) throw ParseError("element: dangling sign in '" + text + "'");
    if (term.back() == 'w') {
      std::string coef = term.substr(0, term.size() - 1);
      long long c;
      if (coef.empty() || coef == "+")
        c = 1;
      else if (coef == "-")
        c = -1;
      else
        c = parse_ll(coef, "element w-coefficient");
      y = checked_add(y, c);
    } else {
      x = checked_add(x, parse_ll(term, "element"));
    }
  }
  if (K.is_rational() && y != 0)
    throw ParseError("element: w-part not allowed in the rational field");
  return Element{x, y};
}

std::string element_to_string(const FieldDesc& K, const Element& e) {
  if (K.is_rational() || e.y == 0) return std::to_string(e.x);
  std::ostringstream os;
  if (e.x != 0) os << e.x << (e.y > 0 ? "+" : "");
  if (e.y == 1)
    os << "w";
  else if (e.y == -1)
    os << "-w";
  else
    os << e.y << "w";
  return os.str();
}

Ideal parse_ideal(const FieldDesc& K, const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("hnf:", 0) == 0) {
    if (K.is_rational())
      throw ParseError("ideal: hnf form requires a quadratic field");
    std::vector<std::string> parts = split(t.substr(4), ',');
    if (parts.size() != 3) throw ParseError("ideal: hnf needs exactly a,b,c");
    try {
      return ideal_from_hnf(K, parse_ll(parts[0], "hnf a"), parse_ll(parts[1], "hnf b"),
                            parse_ll(parts[2], "hnf c"));
    } catch (const DomainError& e) {
      throw ParseError(std::string("ideal: ") + e.what());
    }
  }
  if (t.rfind("gen:", 0) == 0) {
    std::vector<Element> gens;
    for (const std::string& g : split(t.substr(4), ';'))
      gens.push_back(parse_element(K, g));
    Ideal I;
    try {
      I = ideal_from_generators(K, gens);
    } catch (const DomainError& e) {
      throw ParseError(std::string("ideal: ") + e.what());
    }
    if (I.is_zero()) throw ParseError("ideal: zero modulus");
    return I;
  }
  long long n = parse_ll(t, "ideal");
  if (n == 0) throw ParseError("ideal: zero modulus");
  return ideal_from_rational(K, n);
}

std::string ideal_to_string(const Ideal& I) {
  if (I.is_zero()) return "0";
  if (I.field.is_rational()) return std::to_string(I.n);
  std::ostringstream os;
  os << "hnf:" << I.a << "," << I.b << "," << I.c;
  return os.str();
}

ChiSelector parse_chi_selector(const std::string& text) {
  std::string t = trim(text);
  ChiSelector sel;
  if (t.empty() || t == "trivial") {
    sel.kind = ChiSelector::Kind::trivial;
  } else if (t == "all") {
    sel.kind = ChiSelector::Kind::all;
  } else {
    sel.kind = ChiSelector::Kind::exps;
    for (const std::string& e : split(t, ','))
      sel.exps.push_back(parse_ll(e, "character exponent"));
  }
  return sel;
}

std::string chi_to_string(const std::vector<long long>& exps) {
  bool trivial = true;
  for (long long e : exps)
    if (e != 0) trivial = false;
  if (trivial) return "trivial";
  std::ostringstream os;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) os << ",";
    os << exps[i];
  }
  return os.str();
}

std::string lemma_id_to_string(LemmaId id) {
  switch (id) {
    case LemmaId::coset_character_sum: return "coset_character_sum";
    case LemmaId::congruent_pair_sum: return "congruent_pair_sum";
    case LemmaId::coprime_pair_sum: return "coprime_pair_sum";
    case LemmaId::weighted_pair_sum: return "weighted_pair_sum";
    case LemmaId::tuple_gcd_count: return "tuple_gcd_count";
    case LemmaId::prime_power_identity: return "prime_power_identity";
  }
  return "unknown";
}

std::string report_line_json(const VerificationReport& rep) {
  json j;
  j["field"] = field_to_string(rep.field);
  j["modulus"] = ideal_to_string(rep.modulus);
  j["chi"] = chi_to_string(rep.chi_exps);
  j["conductor"] = ideal_to_string(rep.conductor);
  j["a0"] = ideal_to_string(rep.a0);
  j["s"] = rep.s;
  j["lhs"] = rep.lhs_grouped;
  j["rhs"] = rep.rhs_closed;
  j["match"] = rep.match;
  j["ms"] = rep.ms;
  return j.dump();
}

std::string report_csv_header() {
  return "field,modulus,chi,conductor,a0,s,lhs,rhs,match,ms";
}

std::string report_line_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << csv_quote(field_to_string(rep.field)) << ","
     << csv_quote(ideal_to_string(rep.modulus)) << ","
     << csv_quote(chi_to_string(rep.chi_exps)) << ","
     << csv_quote(ideal_to_string(rep.conductor)) << ","
     << csv_quote(ideal_to_string(rep.a0)) << "," << rep.s << "," << rep.lhs_grouped
     << "," << rep.rhs_closed << "," << (rep.match ? "true" : "false") << "," << rep.ms;
  return os.str();
}

std::string report_full_json(const VerificationReport& rep) {
  json j;
  j["field"] = field_to_string(rep.field);
  j["modulus"] = ideal_to_string(rep.modulus);
  j["chi_exps"] = rep.chi_exps;
  j["chi_order"] = rep.chi_order;
  j["conductor"] = ideal_to_string(rep.conductor);
  j["a0"] = ideal_to_string(rep.a0);
  j["s"] = rep.s;
  if (rep.lhs_naive)
    j["lhs_naive"] = *rep.lhs_naive;
  else
    j["lhs_naive"] = nullptr;
  j["lhs_grouped"] = rep.lhs_grouped;
  j["rhs_closed"] = rep.rhs_closed;
  j["match"] = rep.match;
  j["ms"] = rep.ms;
  return j.dump();
}

std::string lemma_line_json(const LemmaCase& cs) {
  json j;
  j["id"] = lemma_id_to_string(cs.id);
  j["field"] = field_to_string(cs.field);
  j["prime"] = ideal_to_string(cs.prime);
  j["m"] = cs.m;
  j["t"] = cs.t;
  if (cs.k >= 0)
    j["k"] = cs.k;
  else
    j["k"] = nullptr;
  if (cs.r >= 0)
    j["r"] = cs.r;
  else
    j["r"] = nullptr;
  if (cs.s >= 0)
    j["s"] = cs.s;
  else
    j["s"] = nullptr;
  j["chi"] = chi_to_string(cs.chi_exps);
  j["brute"] = cs.brute;
  j["closed"] = cs.closed;
  j["match"] = cs.match;
  return j.dump();
}

std::string lemma_csv_header() {
  return "id,field,prime,m,t,k,r,s,chi,brute,closed,match";
}

std::string lemma_line_csv(const LemmaCase& cs) {
  std::ostringstream os;
  os << lemma_id_to_string(cs.id) << "," << csv_quote(field_to_string(cs.field)) << ","
     << csv_quote(ideal_to_string(cs.prime)) << "," << cs.m << "," << cs.t << ",";
  if (cs.k >= 0) os << cs.k;
  os << ",";
  if (cs.r >= 0) os << cs.r;
  os << ",";
  if (cs.s >= 0) os << cs.s;
  os << "," << csv_quote(chi_to_string(cs.chi_exps)) << "," << cs.brute << ","
     << cs.closed << "," << (cs.match ? "true" : "false");
  return os.str();
}

} // namespace menon::io
