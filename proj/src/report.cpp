#include "lident/report.hpp"

#include <cstdio>
#include <sstream>

namespace lident {

using nlohmann::json;

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

json complex_to_json(const ComplexApprox& z) {
  return json{{"re", z.re}, {"im", z.im}, {"err", z.err}};
}

json config_to_json(const SweepConfig& cfg) {
  return json{{"q_min", cfg.q_min},
              {"q_max", cfg.q_max},
              {"s_max", cfg.s_max},
              {"tol", cfg.tol},
              {"parallel", cfg.parallel},
              {"theorem1_N_s2", cfg.theorem1_N_s2},
              {"theorem1_N", cfg.theorem1_N},
              {"conventions",
               {{"theorem1", theorem1_prefactor_name(cfg.conventions.theorem1)},
                {"appell", appell_sign_name(cfg.conventions.appell)},
                {"corollary10",
                 corollary10_prefactor_name(cfg.conventions.corollary10)}}}};
}

}  // namespace

json record_to_json(const VerificationRecord& rec) {
  return json{{"q", rec.q},
              {"chi_index", rec.chi_index},
              {"s", rec.s},
              {"identity", rec.identity},
              {"convention", rec.convention},
              {"value", complex_to_json(rec.identity_value)},
              {"oracle", complex_to_json(rec.oracle_value)},
              {"abs_dev", rec.abs_dev},
              {"rel_dev", rec.rel_dev},
              {"tolerance", rec.tolerance},
              {"passed", rec.passed()}};
}

json sweep_to_json(const SweepResult& result) {
  json records = json::array();
  for (const auto& rec : result.records) records.push_back(record_to_json(rec));
  json summary = json::object();
  for (const auto& [identity, dev] : result.max_dev) summary[identity] = dev;
  return json{{"tool_version", kToolVersion},
              {"configuration", config_to_json(result.config)},
              {"records", records},
              {"summary_max_dev", summary},
              {"all_passed", result.all_passed}};
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "q,chi_index,s,identity,convention,re,im,oracle_re,oracle_im,"
        "abs_dev,rel_dev\n";
  for (const auto& r : result.records) {
    os << r.q << ',' << r.chi_index << ',' << r.s << ',' << r.identity << ','
       << r.convention << ',' << format17(r.identity_value.re) << ','
       << format17(r.identity_value.im) << ',' << format17(r.oracle_value.re)
       << ',' << format17(r.oracle_value.im) << ',' << format17(r.abs_dev)
       << ',' << format17(r.rel_dev) << '\n';
  }
  return os.str();
}

json adjudication_to_json(const AdjudicationReport& report) {
  json sites = json::array();
  for (const auto& site : report.sites) {
    json s{{"site", site.site},
           {"passing", site.passing},
           {"selected", site.selected},
           {"separable", site.separable},
           {"selected_max_dev", site.selected_max_dev}};
    if (site.rejected_witness) {
      s["rejected_worst_dev"] = site.rejected_worst_dev;
      s["rejected_witness"] = record_to_json(*site.rejected_witness);
    }
    sites.push_back(std::move(s));
  }
  json errata = json::array();
  for (const auto& e : report.derived_errata)
    errata.push_back(
        {{"id", e.id}, {"printed", e.printed}, {"computed", e.computed}});
  return json{{"tool_version", kToolVersion},
              {"q_max", report.q_max},
              {"s_max", report.s_max},
              {"tol", report.tol},
              {"sites", sites},
              {"derived_errata", errata}};
}

std::string adjudication_to_text(const AdjudicationReport& report) {
  std::ostringstream os;
  os << "adjudication over q <= " << report.q_max << ", s <= " << report.s_max
     << ", tol " << report.tol << "\n\n";
  for (const auto& site : report.sites) {
    os << "site " << site.site << ": ";
    if (site.selected.empty()) {
      os << (site.separable ? "ambiguous (both pass)" : "not separable on this grid")
         << "\n";
      continue;
    }
    os << "selected '" << site.selected << "' (max deviation "
       << format17(site.selected_max_dev) << ")\n";
    if (site.rejected_witness) {
      const auto& w = *site.rejected_witness;
      os << "  rejected reading fails with deviation "
         << format17(site.rejected_worst_dev) << " at q=" << w.q
         << " chi=" << w.chi_index << " s=" << w.s << "\n";
    }
  }
  os << "\nderived errata:\n";
  for (const auto& e : report.derived_errata)
    os << "  [" << e.id << "] printed: " << e.printed
       << " | computed: " << e.computed << "\n";
  return os.str();
}

}  // namespace lident
