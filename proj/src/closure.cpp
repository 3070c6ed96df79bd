#include <algorithm>
#include <limits>

#include "minorkit/enumerate.hpp"
#include "minorkit/minor.hpp"
#include "minorkit/parallel.hpp"
#include "minorkit/property.hpp"

namespace minorkit {

MinorClosedness check_minor_closed(const PropertySpec& p, int max_order, int workers) {
  if (max_order > 8) throw CapacityError("minor-closedness scan is limited to order 8");
  MinorClosedness out;
  out.status = MinorClosedness::Status::empirically_checked;
  out.bound = max_order;
  // Property values of minors, keyed by canonical form.
  MinorMemo values("value:" + p.text());
  auto value = [&](const CanonicalForm& form) {
    if (auto hit = values.find(form)) return *hit;
    const bool v = p.evaluate(form.graph());
    values.insert(form, v);
    return v;
  };
  for (int n = 1; n <= max_order; ++n) {
    const auto& graphs = GraphEnumerator::shared().layer(n);
    std::vector<std::optional<ClosureCounterexample>> found(graphs.size());
    parallel_for(graphs.size(), workers, [&](std::size_t i) {
      const Graph& g = graphs[i];
      if (!value(canonical_form(g))) return;
      for (const OneStepMinor& step : one_step_minors(g)) {
        if (!value(canonical_form(step.result))) {
          found[i] = ClosureCounterexample{g, step.result, to_string(step.op) + " " + step.locus()};
          return;
        }
      }
    });
    for (auto& hit : found) {
      if (hit) {
        out.counterexample = std::move(hit);
        return out;
      }
    }
  }
  out.clean = true;
  return out;
}

}  // namespace minorkit
