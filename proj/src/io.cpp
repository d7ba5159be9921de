#include "dualref/io.hpp"

#include <ostream>

#include "dualref/errors.hpp"

namespace dualref {

std::string format_real(const Real& x, unsigned digits) {
  return real_to_string(x, digits);
}

Json bounded_json(const BoundedReal& v, unsigned digits) {
  Json j;
  j["value"] = format_real(v.value, digits);
  j["error_bound"] = format_real(v.bound, 3);
  return j;
}

Json series_to_json(const NCSeries<Rational>& s) {
  Json j;
  j["degree_bound"] = s.degree();
  Json entries = Json::array();
  for_each_word(s.degree(), [&](const Word& w) {
    const Rational& c = s.coeff(w);
    if (c == 0) return;
    Json e;
    e["word"] = w.str();
    e["value"] = rational_to_string(c);
    entries.push_back(std::move(e));
  });
  j["entries"] = std::move(entries);
  return j;
}

Json series_to_json(const NCSeries<BoundedReal>& s, unsigned digits) {
  Json j;
  j["degree_bound"] = s.degree();
  Json entries = Json::array();
  for_each_word(s.degree(), [&](const Word& w) {
    const BoundedReal& c = s.coeff(w);
    if (c.value == 0 && c.bound == 0) return;
    Json e;
    e["word"] = w.str();
    e["value"] = format_real(c.value, digits);
    e["error_bound"] = format_real(c.bound, 3);
    entries.push_back(std::move(e));
  });
  j["entries"] = std::move(entries);
  return j;
}

NCSeries<Rational> rational_series_from_json(const Json& j) {
  if (!j.contains("degree_bound") || !j.contains("entries")) {
    throw domain_error("series JSON needs degree_bound and entries");
  }
  NCSeries<Rational> s(j.at("degree_bound").get<int>());
  for (const auto& e : j.at("entries")) {
    Word w = Word::from_string(e.at("word").get<std::string>());
    s.at(w) = rational_from_string(e.at("value").get<std::string>());
  }
  return s;
}

void write_series_csv(std::ostream& os, const NCSeries<BoundedReal>& s, unsigned digits) {
  os << "word,multi_index,value,error_bound\n";
  for_each_word(s.degree(), [&](const Word& w) {
    const BoundedReal& c = s.coeff(w);
    os << w.str() << ',';
    if (w.empty() || w.last() == Letter::Y) {
      std::string idx = index_of_word(w).str();
      if (idx.find(',') != std::string::npos) {
        os << '"' << idx << '"';
      } else {
        os << idx;
      }
    }
    os << ',' << format_real(c.value, digits) << ',' << format_real(c.bound, 3) << '\n';
  });
}

}  // namespace dualref
