#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "holembed/biortho.hpp"
#include "holembed/embedding.hpp"
#include "holembed/errors.hpp"
#include "holembed/kothe.hpp"
#include "holembed/rational.hpp"
#include "holembed/sparse.hpp"
#include "holembed/weights.hpp"

// JSON wire formats. All rationals travel as canonical "p/q" strings
// (reduced, positive denominator, bare "p" for integers); decimal fields
// are 17-significant-digit annotations, never inputs. nlohmann::json keeps
// object keys sorted, so serializing the same value twice is byte-identical.

namespace holembed {

using Json = nlohmann::json;

inline Json to_json(const ComplexRational& c) {
  return Json{{"re", format_rational(c.re)}, {"im", format_rational(c.im)}};
}

inline ComplexRational complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw InvalidParameter("complex value needs {\"re\", \"im\"}");
  return {parse_rational(j.at("re").get<std::string>()),
          parse_rational(j.at("im").get<std::string>())};
}

template <class Tag>
Json to_json(const SparseSeq<Tag>& s) {
  Json entries = Json::array();
  for (const auto& [n, c] : s.entries())
    entries.push_back(Json{{"n", n}, {"re", format_rational(c.re)}, {"im", format_rational(c.im)}});
  return Json{{"entries", std::move(entries)}};
}

template <class Tag>
SparseSeq<Tag> sparse_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
    throw InvalidParameter("sparse sequence needs an \"entries\" array");
  SparseSeq<Tag> s;
  for (const auto& entry : j.at("entries")) {
    const auto n = entry.at("n").get<std::size_t>();
    s.set(n, {parse_rational(entry.at("re").get<std::string>()),
              parse_rational(entry.at("im").get<std::string>())});
  }
  return s;
}

inline SparseVector sparse_vector_from_json(const Json& j) {
  return sparse_from_json<VectorTag>(j);
}
inline SparseFunctional sparse_functional_from_json(const Json& j) {
  return sparse_from_json<FunctionalTag>(j);
}

// --- space specification ---------------------------------------------------

inline Json to_json(const KotheMatrix& m) {
  Json j{{"family", to_string(m.family)}, {"grades", m.grades}, {"window", m.window}};
  if (m.family == KotheFamily::custom) {
    Json rows = Json::array();
    for (const auto& row : m.rows) {
      Json cells = Json::array();
      for (const auto& w : row) cells.push_back(format_rational(w));
      rows.push_back(std::move(cells));
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

inline KotheMatrix kothe_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw InvalidParameter("space specification needs a \"family\"");
  const auto family = j.at("family").get<std::string>();
  if (family == "custom") {
    if (!j.contains("rows")) throw InvalidParameter("custom space needs \"rows\"");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j.at("rows")) {
      std::vector<Rational> cells;
      for (const auto& cell : row) cells.push_back(parse_rational(cell.get<std::string>()));
      rows.push_back(std::move(cells));
    }
    KotheMatrix m = make_kothe_custom(std::move(rows));
    if (j.contains("grades") && j.at("grades").get<std::size_t>() != m.grades)
      throw InvalidParameter("custom space \"grades\" does not match its rows");
    if (j.contains("window") && j.at("window").get<std::size_t>() != m.window)
      throw InvalidParameter("custom space \"window\" does not match its rows");
    return m;
  }
  if (!j.contains("grades") || !j.contains("window"))
    throw InvalidParameter("space specification needs \"grades\" and \"window\"");
  const auto grades = j.at("grades").get<std::size_t>();
  const auto window = j.at("window").get<std::size_t>();
  if (family == "rapid_decrease") return make_kothe(KotheFamily::rapid_decrease, grades, window);
  if (family == "disc_type") return make_kothe(KotheFamily::disc_type, grades, window);
  throw InvalidParameter("unknown space family \"" + family + "\"");
}

// --- weights ----------------------------------------------------------------

inline Json weights_spec_json(const WeightSequence& w) {
  Json j{{"family", to_string(w.family())}};
  if (w.family() == WeightFamily::gaussian) j["q"] = format_rational(w.gaussian_base());
  return j;
}

inline WeightSequence weights_from_json(const Json& j, std::size_t window) {
  if (!j.is_object() || !j.contains("family"))
    throw InvalidParameter("weight specification needs a \"family\"");
  const auto family = j.at("family").get<std::string>();
  if (family == "inverse_factorial") return WeightSequence::inverse_factorial(window);
  if (family == "gaussian") {
    if (!j.contains("q")) throw InvalidParameter("gaussian weights need \"q\"");
    return WeightSequence::gaussian(parse_rational(j.at("q").get<std::string>()), window);
  }
  if (family == "custom")
    throw CertificationUnavailable(
        "custom weights cannot carry a certified tail majorant through JSON");
  throw InvalidParameter("unknown weight family \"" + family + "\"");
}

// --- domain -----------------------------------------------------------------

inline Json to_json(const Domain& d) {
  if (d.is_plane) return Json("plane");
  return Json{{"disc", format_rational(d.radius)}};
}

inline Domain domain_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "plane") return Domain::plane();
    throw InvalidParameter("unknown domain \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("disc"))
    return Domain::disc(parse_rational(j.at("disc").get<std::string>()));
  throw InvalidParameter("domain must be \"plane\" or {\"disc\": \"R\"}");
}

// --- biorthogonal system ----------------------------------------------------

inline Json to_json(const BiorthogonalSystem& sys) {
  Json e_vectors = Json::array(), e_functionals = Json::array(), m_constants = Json::array();
  for (const auto& e : sys.e_vectors) e_vectors.push_back(to_json(e));
  for (const auto& e : sys.e_functionals) e_functionals.push_back(to_json(e));
  for (const auto& m : sys.m_constants) m_constants.push_back(format_rational(m));
  return Json{{"stage", sys.stage},
              {"space", to_json(sys.space)},
              {"e_vectors", std::move(e_vectors)},
              {"e_functionals", std::move(e_functionals)},
              {"m_constants", std::move(m_constants)}};
}

inline BiorthogonalSystem system_from_json(const Json& j) {
  BiorthogonalSystem sys;
  sys.stage = j.at("stage").get<std::size_t>();
  sys.space = kothe_from_json(j.at("space"));
  for (const auto& e : j.at("e_vectors")) sys.e_vectors.push_back(sparse_vector_from_json(e));
  for (const auto& e : j.at("e_functionals"))
    sys.e_functionals.push_back(sparse_functional_from_json(e));
  for (const auto& m : j.at("m_constants"))
    sys.m_constants.push_back(parse_rational(m.get<std::string>()));
  if (sys.e_vectors.size() != sys.stage || sys.e_functionals.size() != sys.stage ||
      sys.m_constants.size() != sys.stage)
    throw InvalidParameter("system stage does not match its lists");
  return sys;
}

// --- embedded image ---------------------------------------------------------

inline Json to_json(const EmbeddedImage& image) {
  Json coefficients = Json::array();
  for (const auto& c : image.coefficients) coefficients.push_back(to_json(c));
  return Json{{"stage", image.stage},
              {"coefficients", std::move(coefficients)},
              {"p_norm", format_rational(image.p_norm)},
              {"weights", weights_spec_json(image.weights)},
              {"domain", to_json(image.domain)}};
}

inline EmbeddedImage image_from_json(const Json& j) {
  EmbeddedImage image;
  image.stage = j.at("stage").get<std::size_t>();
  for (const auto& c : j.at("coefficients")) image.coefficients.push_back(complex_from_json(c));
  if (image.coefficients.size() != image.stage)
    throw InvalidParameter("image stage does not match its coefficient list");
  image.p_norm = parse_rational(j.at("p_norm").get<std::string>());
  image.weights = weights_from_json(j.at("weights"), image.stage);
  image.domain = domain_from_json(j.at("domain"));
  return image;
}

// --- reports ----------------------------------------------------------------

inline Json to_json(const ConditionReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(Json{{"condition", w.condition}, {"detail", w.detail}});
  Json m_constants = Json::array();
  for (const auto& m : report.m_constants) m_constants.push_back(format_rational(m));
  return Json{{"stage", report.stage},
              {"conditions",
               Json{{"i", report.spans_vectors},
                    {"ii", report.equicontinuous},
                    {"iii", report.spans_functionals},
                    {"iv", report.biorthogonal}}},
              {"witnesses", std::move(witnesses)},
              {"m_constants", std::move(m_constants)}};
}

inline Json to_json(const ContinuityRow& row) {
  return Json{{"k", format_rational(row.k)},
              {"stage", row.stage},
              {"partial_sum", format_rational(row.partial_sum)},
              {"tail_bound", format_rational(row.tail_bound)},
              {"C_k", format_rational(row.c_k)},
              {"partial_sum_dec17", decimal17(row.partial_sum)},
              {"tail_bound_dec17", decimal17(row.tail_bound)},
              {"C_k_dec17", decimal17(row.c_k)}};
}

/// Header is pinned; the three *_dec17 columns are decimal annotations of
/// the exact rational columns before them.
inline std::string continuity_csv(const std::vector<ContinuityRow>& rows) {
  std::string out = "k,stage,partial_sum,tail_bound,C_k,partial_sum_dec17,tail_bound_dec17,C_k_dec17\n";
  for (const auto& row : rows) {
    out += format_rational(row.k) + "," + std::to_string(row.stage) + "," +
           format_rational(row.partial_sum) + "," + format_rational(row.tail_bound) + "," +
           format_rational(row.c_k) + "," + decimal17(row.partial_sum) + "," +
           decimal17(row.tail_bound) + "," + decimal17(row.c_k) + "\n";
  }
  return out;
}

}  // namespace holembed
