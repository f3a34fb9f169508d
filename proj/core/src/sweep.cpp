#include "homrand/sweep.hpp"

#include <algorithm>

#include "homrand/chart.hpp"
#include "homrand/finsler.hpp"

namespace homrand {

SweepResult run_sweep(unsigned seed, int count, bool with_oracle, double tol) {
  SweepResult result;
  std::vector<const CatalogEntry*> entries;
  for (const auto& e : catalog_entries()) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](auto* a, auto* b) { return a->name < b->name; });

  for (const auto* entry : entries) {
    auto us = random_admissible_u(*entry, seed, count);
    for (int idx = 0; idx < static_cast<int>(us.size()); ++idx) {
      SweepCase sc;
      sc.entry = entry->name;
      sc.index = idx;
      sc.u = us[idx];
      RandersDatum datum = RandersDatum::make(entry->space, us[idx]);
      CriteriaReport rep = equivalence_check(datum, tol);
      sc.berwald = rep.berwald;
      sc.ricci_quadratic = rep.ricci_quadratic;
      sc.parallel_form = rep.parallel_form;
      sc.expected = entry->expected_berwald(us[idx]);
      sc.agree = (sc.berwald == sc.ricci_quadratic) && (sc.berwald == sc.parallel_form) &&
                 (sc.berwald == sc.expected);

      if (with_oracle) {
        RandersDatum al = align_basis(datum);
        MetricField field = make_metric_field(al);
        auto samples = defect_samples(al.space.n());
        VectorXd origin = VectorXd::Zero(al.space.n());
        sc.berwald_defect = berwald_defect(field, origin, samples);
        sc.ricci_defect = ricci_defect(field, origin, samples);
        DefectVerdict bv = classify_defect(sc.berwald_defect);
        DefectVerdict rv = classify_defect(sc.ricci_defect);
        sc.oracle_agree = (bv == (sc.berwald ? DefectVerdict::quadratic : DefectVerdict::non_quadratic)) &&
                          (rv == (sc.ricci_quadratic ? DefectVerdict::quadratic : DefectVerdict::non_quadratic));
        sc.agree = sc.agree && sc.oracle_agree;
      }
      result.all_agree = result.all_agree && sc.agree;
      result.cases.push_back(std::move(sc));
    }
  }
  return result;
}

}  // namespace homrand
