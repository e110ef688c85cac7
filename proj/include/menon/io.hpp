#pragma once

#include <string>
#include <vector>

#include "menon/engine.hpp"

namespace menon::io {

// "Q" or "Q(sqrt D)" with D a squarefree integer other than 0 and 1
FieldDesc parse_field(const std::string& text);
std::string field_to_string(const FieldDesc& K);

// "x", "x+yw", "-x-yw", "yw" ... with w the quadratic generator
Element parse_element(const FieldDesc& K, const std::string& text);
std::string element_to_string(const FieldDesc& K, const Element& e);

// rational: a plain integer; quadratic: "hnf:a,b,c" or "gen:e1;e2;..."
Ideal parse_ideal(const FieldDesc& K, const std::string& text);
std::string ideal_to_string(const Ideal& I);

// character selector on the command line: trivial | all | e1,e2,...
struct ChiSelector {
  enum class Kind { trivial, all, exps } kind = Kind::trivial;
  std::vector<long long> exps;
};
ChiSelector parse_chi_selector(const std::string& text);

// "trivial" for the all-zero exponent vector, otherwise "e1,e2,..."
std::string chi_to_string(const std::vector<long long>& exps);

std::string lemma_id_to_string(LemmaId id);

// one compact line per case: {field, modulus, chi, conductor, a0, s, lhs, rhs, match, ms}
std::string report_line_json(const VerificationReport& rep);
std::string report_line_csv(const VerificationReport& rep);
std::string report_csv_header();

// every VerificationReport field, including the optional naive value
std::string report_full_json(const VerificationReport& rep);

std::string lemma_line_json(const LemmaCase& cs);
std::string lemma_line_csv(const LemmaCase& cs);
std::string lemma_csv_header();

} // namespace menon::io
