#include "frobex/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace frobex {

using json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "text") return OutputFormat::text;
  if (text == "csv") return OutputFormat::csv;
  throw Error("unknown output format '" + text + "'");
}

std::string poset_to_json(const IntervalPoset& poset) {
  json elements = json::array();
  for (const MonoidElement& e : poset.elements()) elements.push_back(e.coords());
  json lt = json::array();
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j)
      if (poset.less(i, j)) lt.push_back({i, j});
  json out{{"elements", std::move(elements)}, {"lt", std::move(lt)}};
  return out.dump();
}

std::string poset_to_text(const IntervalPoset& poset) {
  std::ostringstream os;
  for (std::size_t i = 0; i < poset.size(); ++i)
    os << i << ": " << poset.element(i).to_string() << '\n';
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j)
      if (poset.less(i, j)) os << i << " < " << j << '\n';
  return os.str();
}

std::string poset_to_csv(const IntervalPoset& poset) {
  std::ostringstream os;
  os << "kind,index,data\n";
  for (std::size_t i = 0; i < poset.size(); ++i)
    os << "element," << i << ",\"" << poset.element(i).to_string() << "\"\n";
  std::size_t row = 0;
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j)
      if (poset.less(i, j)) os << "lt," << row++ << ",\"" << i << '<' << j << "\"\n";
  return os.str();
}

std::string complex_to_json(const SimplicialComplex& complex) {
  json by_dim = json::array();
  for (std::size_t d = 0; d < complex.faces.size(); ++d) {
    json dim = json::array();
    for (std::size_t i = 0; i < complex.face_count(d); ++i) {
      auto f = complex.face(d, i);
      dim.push_back(std::vector<std::int32_t>(f.begin(), f.end()));
    }
    by_dim.push_back(std::move(dim));
  }
  json out{{"vertex_count", complex.vertex_count},
           {"faces_by_dim", std::move(by_dim)}};
  return out.dump();
}

std::string complex_to_text(const SimplicialComplex& complex) {
  std::ostringstream os;
  auto maximal = facets(complex);
  for (std::size_t d = 0; d < maximal.size(); ++d) {
    std::size_t stride = d + 1;
    for (std::size_t i = 0; i + stride <= maximal[d].size(); i += stride) {
      for (std::size_t t = 0; t < stride; ++t) {
        if (t) os << ' ';
        os << maximal[d][i + t];
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string complex_to_csv(const SimplicialComplex& complex) {
  std::ostringstream os;
  os << "facet\n";
  auto maximal = facets(complex);
  for (std::size_t d = 0; d < maximal.size(); ++d) {
    std::size_t stride = d + 1;
    for (std::size_t i = 0; i + stride <= maximal[d].size(); i += stride) {
      os << '"';
      for (std::size_t t = 0; t < stride; ++t) {
        if (t) os << ' ';
        os << maximal[d][i + t];
      }
      os << "\"\n";
    }
  }
  return os.str();
}

std::string betti_to_json(const BettiVector& betti) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, val] : betti.entries()) {
    if (!first) os << ", ";
    first = false;
    os << '"' << deg << "\": " << val;
  }
  os << '}';
  return os.str();
}

std::string betti_to_text(const BettiVector& betti) {
  return betti.to_string();
}

std::string betti_to_csv(const BettiVector& betti) {
  std::ostringstream os;
  os << "degree,betti\n";
  for (const auto& [deg, val] : betti.entries())
    os << deg << ',' << val << '\n';
  return os.str();
}

std::string prediction_to_json(const Prediction& prediction) {
  const char* type = prediction.type == Prediction::Type::point
                         ? "point"
                         : prediction.type == Prediction::Type::sphere
                               ? "sphere"
                               : "wedge_of_spheres";
  json out{{"type", type}};
  if (prediction.type != Prediction::Type::point) {
    out["dim"] = prediction.dim;
    out["multiplicity"] = prediction.multiplicity;
  }
  json betti = json::object();
  for (const auto& [deg, val] : prediction.betti.entries())
    betti[std::to_string(deg)] = val;
  out["betti"] = std::move(betti);
  out["label"] = prediction.label();
  return out.dump();
}

std::string prediction_to_text(const Prediction& prediction) {
  std::ostringstream os;
  switch (prediction.type) {
    case Prediction::Type::point:
      os << "point (contractible)";
      break;
    case Prediction::Type::sphere:
      os << "sphere dim " << prediction.dim;
      break;
    case Prediction::Type::wedge_of_spheres:
      os << "wedge of " << prediction.multiplicity << " spheres dim "
         << prediction.dim;
      break;
  }
  os << "; local betti " << prediction.betti.to_string();
  return os.str();
}

std::string recognized_to_json(const RecognizedMonoid& recognized) {
  json out{{"p", recognized.p},
           {"q", recognized.q},
           {"r", recognized.r},
           {"permutation", recognized.permutation}};
  return out.dump();
}

std::string recognized_to_text(const RecognizedMonoid& recognized) {
  std::ostringstream os;
  os << "p=" << recognized.p << " q=" << recognized.q << " r=" << recognized.r
     << " permutation=" << recognized.permutation[0] << ','
     << recognized.permutation[1] << ',' << recognized.permutation[2];
  return os.str();
}

namespace {

json series_terms(const MultigradedSeries& series) {
  json terms = json::array();
  for (const auto& [key, coeff] : series.terms())
    terms.push_back(
        {{"i", key.first}, {"lambda", key.second}, {"coeff", coeff}});
  return terms;
}

}  // namespace

std::string series_to_json(const MultigradedSeries& series) {
  json out{{"spec", series.spec().to_string()},
           {"i_max", series.trunc().i_max},
           {"terms", series_terms(series)}};
  return out.dump();
}

std::string series_to_csv(const MultigradedSeries& series) {
  std::ostringstream os;
  os << "i,lambda,coeff\n";
  for (const auto& [key, coeff] : series.terms()) {
    os << key.first << ",\"";
    for (std::size_t t = 0; t < key.second.size(); ++t) {
      if (t) os << ',';
      os << key.second[t];
    }
    os << "\"," << coeff << '\n';
  }
  return os.str();
}

std::string diff_to_json(const std::vector<SeriesDiffEntry>& diff) {
  json out = json::array();
  for (const SeriesDiffEntry& d : diff)
    out.push_back({{"i", d.i},
                   {"lambda", d.lambda},
                   {"lhs", d.lhs},
                   {"rhs", d.rhs}});
  return out.dump();
}

}  // namespace frobex
