#include "ltsd/confluence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ltsd/decompose_async.hpp"
#include "ltsd/decompose_sync.hpp"
#include "ltsd/equivalence.hpp"
#include "ltsd/tau.hpp"

namespace ltsd {

confluence_report is_confluent(const lts& m, const std::set<action>& first,
                               const std::set<action>& second) {
  for (const std::set<action>* side : {&first, &second})
    for (const action& x : *side)
      if (x.is_internal())
        throw std::invalid_argument("the internal action cannot be a confluence set member");
  for (const action& x : first)
    if (second.count(x))
      throw std::invalid_argument("confluence sets overlap on \"" + x.text() + "\"");

  transition_index index(m);
  confluence_report report;
  for (state_id s = 0; s < m.num_states(); ++s) {
    for (const auto& [a, after_a] : index.out(s)) {
      if (!first.count(a)) continue;
      for (const auto& [b, after_b] : index.out(s)) {
        if (!second.count(b)) continue;
        auto via_a = index.out(after_a, b);  // targets sorted ascending
        auto via_b = index.out(after_b, a);
        bool closed = false;
        std::size_t i = 0, j = 0;
        while (i < via_a.size() && j < via_b.size()) {
          if (via_a[i].second == via_b[j].second) {
            closed = true;
            break;
          }
          if (via_a[i].second < via_b[j].second)
            ++i;
          else
            ++j;
        }
        if (!closed) report.violations.push_back({s, a, b, after_a, after_b});
      }
    }
  }
  report.confluent = report.violations.empty();
  return report;
}

namespace {

demo_pipeline_report pipeline_report(const lts& source, const lts& product,
                                     const std::set<action>& first,
                                     const std::set<action>& second) {
  demo_pipeline_report r;
  r.branching_equivalent = branching_bisim(product, source).equivalent;
  r.divergence_preserving = dpbb(product, source).equivalent;
  r.product_divergent = !divergent_states(product).empty();
  r.product_confluent = is_confluent(product, first, second).confluent;
  r.product_states = product.num_states();
  r.product_transitions = product.transitions().size();
  return r;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void pipeline_text(std::ostringstream& os, const char* title, const demo_pipeline_report& p) {
  os << title << ": product has " << p.product_states << " states and " << p.product_transitions
     << " transitions; branching-equivalent to the source: " << yes_no(p.branching_equivalent)
     << "; divergence-preserving: " << yes_no(p.divergence_preserving)
     << "; divergent: " << yes_no(p.product_divergent)
     << "; commutes the split: " << yes_no(p.product_confluent) << "\n";
}

}  // namespace

impossibility_demo_report dpbb_impossibility_demo(std::size_t capacity) {
  const action a = action::visible("a");
  const action b = action::visible("b");
  lts source = lts::from_transitions(3, 0, {{0, a, 1}, {0, b, 2}});
  const std::vector<std::string> names{"p", "r", "s"};
  alphabet_partition split = alphabet_partition::over(source, {a}, {b});

  impossibility_demo_report rep{.source = source};
  rep.source_divergent = !divergent_states(source).empty();
  rep.source_confluence = is_confluent(source, {a}, {b});

  sync_decomposition joint = decomp_s(source, split, &names);
  rep.joint = pipeline_report(source, compose_sync(joint).system, {a}, {b});

  async_decomposition queued = decomp_a(source, split, capacity, &names);
  rep.queued = pipeline_report(source, compose_async(queued).system, {a}, {b});
  return rep;
}

std::string to_text(const impossibility_demo_report& report) {
  std::ostringstream os;
  os << "source: " << report.source.num_states() << " states, "
     << report.source.transitions().size() << " transitions, "
     << (report.source_divergent ? "divergent" : "divergence-free") << "\n";
  if (report.source_confluence.confluent) {
    os << "the source commutes the two action sets\n";
  } else {
    const confluence_violation& v = report.source_confluence.violations.front();
    os << "the source does not commute the two action sets: at state " << v.state << ", "
       << v.a.text() << " (to state " << v.after_a << ") and " << v.b.text() << " (to state "
       << v.after_b << ") never meet again\n";
  }
  pipeline_text(os, "joint components", report.joint);
  pipeline_text(os, "queued components", report.queued);
  os << "both products reproduce the source up to branching equivalence, but only at the "
        "price of endless internal coordination: the products are divergent although the "
        "source is not, so the divergence-aware equivalence is lost either way\n";
  return os.str();
}

}  // namespace ltsd
