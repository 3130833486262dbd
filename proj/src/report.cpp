#include "cliffbreak/report.hpp"

#include <json.hpp>

#include <sstream>

#include "cliffbreak/version.hpp"

namespace cliffbreak {

ClaimTally tally(const std::vector<ClaimResult>& results) {
  ClaimTally t;
  for (const ClaimResult& r : results) {
    switch (r.status) {
      case ClaimStatus::Pass: ++t.pass; break;
      case ClaimStatus::Fail: ++t.fail; break;
      case ClaimStatus::Discrepancy: ++t.discrepancy; break;
    }
  }
  return t;
}

std::string render_text(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  for (const ClaimResult& r : results) {
    out << r.id;
    for (std::size_t i = r.id.size(); i < 18; ++i) out << ' ';
    out << claim_status_name(r.status);
    for (std::size_t i = std::string(claim_status_name(r.status)).size(); i < 13; ++i)
      out << ' ';
    out << r.source << '\n';
    const ClaimDetails& d = r.details;
    if (!d.ranks.empty()) {
      out << "    ranks:";
      for (long v : d.ranks) out << ' ' << v;
      out << '\n';
    }
    if (d.inertia)
      out << "    inertia: (" << d.inertia->plus << "," << d.inertia->minus << ","
          << d.inertia->zero << ")\n";
    if (d.factors) out << "    class: " << *d.factors << '\n';
    if (d.pseudoscalar_factor) out << "    factor: " << *d.pseudoscalar_factor << '\n';
    for (const std::string& n : d.notes) out << "    note: " << n << '\n';
  }
  ClaimTally t = tally(results);
  out << t.total() << " claims: " << t.pass << " passed, " << t.discrepancy
      << " discrepancies, " << t.fail << " failed\n";
  return out.str();
}

std::string render_json(const std::vector<ClaimResult>& results, std::uint64_t seed) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["schema_version"] = "1";
  doc["tool"] = json{{"name", kToolName}, {"version", kToolVersion}};
  doc["seed"] = seed;
  json arr = json::array();
  for (const ClaimResult& r : results) {
    json e;
    e["id"] = r.id;
    e["status"] = claim_status_name(r.status);
    e["paper_ref"] = r.source;
    json det = json::object();
    const ClaimDetails& d = r.details;
    if (!d.ranks.empty()) det["ranks"] = d.ranks;
    if (d.inertia)
      det["inertia"] = json::array({d.inertia->plus, d.inertia->minus, d.inertia->zero});
    if (d.factors) det["factors"] = *d.factors;
    if (d.pseudoscalar_factor) det["pseudoscalar_factor"] = *d.pseudoscalar_factor;
    if (!d.notes.empty()) det["notes"] = d.notes;
    e["details"] = det;
    arr.push_back(std::move(e));
  }
  doc["results"] = std::move(arr);
  return doc.dump(2) + "\n";
}

}  // namespace cliffbreak
