#include "cyclic_es/json_io.hpp"

#include <nlohmann/json.hpp>

namespace cyclic_es {

using nlohmann::json;

json bigcount_to_json(const BigCount& value) {
  if (fits_uint64(value)) {
    return json(static_cast<std::uint64_t>(value));
  }
  return json(to_decimal_string(value));
}

json rational_to_json(const Rational& value) {
  return json{
      {"numerator", bigcount_to_json(boost::multiprecision::numerator(value))},
      {"denominator",
       bigcount_to_json(boost::multiprecision::denominator(value))},
      {"approx", static_cast<double>(value)},
  };
}

json permutation_to_json(const Permutation& p) { return json(p.values()); }

json cyclic_to_json(const CyclicPermutation& c) {
  return json(c.canonical().values());
}

json witness_to_json(const SubPermutationWitness& w) {
  return json{
      {"direction", direction_name(w.direction)},
      {"length", w.length()},
      {"positions", w.positions},
      {"values", w.values},
  };
}

json tableau_to_json(const YoungTableau& t) {
  return json{
      {"rows", t.rows()},
      {"cols", t.cols()},
      {"entries", t.to_rows()},
  };
}

YoungTableau tableau_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("entries") ||
        !doc["entries"].is_array()) {
      throw Error(errc::invalid_tableau,
                  "InvalidTableau: expected an object with an \"entries\" "
                  "array of rows");
    }
    const auto entries =
        doc["entries"].get<std::vector<std::vector<int>>>();
    YoungTableau t = YoungTableau::from_rows(entries);
    if (doc.contains("rows") &&
        (!doc["rows"].is_number_integer() || doc["rows"].get<int>() != t.rows())) {
      throw Error(errc::invalid_tableau,
                  "InvalidTableau: \"rows\" disagrees with \"entries\"");
    }
    if (doc.contains("cols") &&
        (!doc["cols"].is_number_integer() || doc["cols"].get<int>() != t.cols())) {
      throw Error(errc::invalid_tableau,
                  "InvalidTableau: \"cols\" disagrees with \"entries\"");
    }
    return t;
  } catch (const Error& e) {
    if (e.code() == errc::invalid_tableau) throw;
    throw Error(errc::invalid_tableau,
                std::string("InvalidTableau: ") + e.what());
  } catch (const json::exception& e) {
    throw Error(errc::invalid_tableau,
                std::string("InvalidTableau: ") + e.what());
  }
}

json grid_assignment_to_json(const GridAssignment& ga) {
  json cells = json::array();
  for (size_t t = 0; t < ga.cells.size(); ++t) {
    cells.push_back(json{{"t", static_cast<int>(t) + 1},
                         {"i", ga.cells[t].first},
                         {"j", ga.cells[t].second}});
  }
  return json{
      {"k", ga.k},
      {"l", ga.l},
      {"cells", std::move(cells)},
      {"ranking", tableau_to_json(ga.ranking)},
      {"valuation", tableau_to_json(ga.valuation)},
  };
}

json grid_drawing_to_json(const GridDrawing& drawing) {
  json points = json::array();
  for (const auto& [t, a] : drawing.points) {
    points.push_back(json::array({t, a}));
  }
  json edges = json::array();
  for (const auto& e : drawing.edges) {
    edges.push_back(json::array({e.t1, e.t2, e.positive_slope ? "pos" : "neg"}));
  }
  return json{{"points", std::move(points)}, {"edges", std::move(edges)}};
}

json extremal_report_to_json(const ExtremalReport& report) {
  return json{
      {"k", report.k},
      {"l", report.l},
      {"cyclic_lis", report.cyclic_lis},
      {"cyclic_lds", report.cyclic_lds},
      {"is_member", report.is_member},
  };
}

json partition_witness_to_json(const PartitionWitness& w) {
  return json{
      {"k", w.k},
      {"l", w.l},
      {"structure", structure_name(w.structure)},
      {"decreasing_blocks", w.decreasing_blocks},
      {"increasing_blocks", w.increasing_blocks},
  };
}

json alpha_report_to_json(const AlphaReport& report) {
  json survivors = json::array();
  for (const auto& c : report.survivors) survivors.push_back(cyclic_to_json(c));
  return json{
      {"k", report.k},
      {"l", report.l},
      {"alpha", report.alpha},
      {"n_tested", report.n_tested},
      {"all_forced", report.all_forced},
      {"survivor_count", report.survivors.size()},
      {"survivors", std::move(survivors)},
  };
}

json mu_estimate_to_json(const MuEstimate& est) {
  return json{
      {"n", est.n},
      {"samples", est.samples},
      {"seed", est.seed},
      {"mean", est.mean},
      {"std_error", est.std_error},
      {"ratio", est.ratio},
  };
}

json erdos_szekeres_report_to_json(const ErdosSzekeresReport& r) {
  return json{
      {"k", r.k},
      {"l", r.l},
      {"lis", r.lis},
      {"lds", r.lds},
      {"satisfies", r.satisfies},
  };
}

}  // namespace cyclic_es
