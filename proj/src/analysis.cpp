#include "cbd/analysis.hpp"

#include <sstream>

#include <json.hpp>

namespace cbd {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

AnalysisOutput analyze_system(const System& system, AnalysisMethod method, std::uint64_t cap) {
  AnalysisOutput output;
  output.consistency = is_consistently_connected(system);
  output.maxeq_connections_sum = 0;
  for (const auto& [object, alphabet] : system.objects()) {
    ConnectionMaxEq maxeq = max_eq_connection(connection_of(system, object));
    output.maxeq_connections_sum += maxeq.value;
    output.connection_maxeq.emplace(object, std::move(maxeq));
  }

  const bool want_lp = method != AnalysisMethod::Cyclic;
  const bool want_cyclic = method != AnalysisMethod::Lp;

  if (want_cyclic) {
    CyclicDetection detection = detect_cyclic(system);
    if (const auto* structure = std::get_if<CyclicStructure>(&detection)) {
      CyclicAnalysis analysis;
      analysis.structure = *structure;
      analysis.cntx = cyclic_measure(*structure);
      analysis.contextual = cyclic_criterion(*structure);
      output.cyclic = std::move(analysis);
    } else {
      output.not_cyclic_reason = std::get<NotCyclic>(detection).reason;
      if (method == AnalysisMethod::Cyclic) {
        fail(ErrorCode::NotApplicable,
             "closed form not applicable: " + output.not_cyclic_reason);
      }
    }
  }

  if (want_lp) {
    const bool fits = AssignmentSpace(system).fits(cap);
    if (fits) {
      output.lp = contextuality_measure(system, cap);
    } else if (method == AnalysisMethod::Lp || !output.cyclic) {
      // Reraise the counting error with its size message.
      build_coupling_lp(system, cap);
    }
  }

  if (output.lp && output.cyclic) {
    output.method = Method::Both;
    output.cntx = output.lp->cntx;
    output.contextual = output.lp->contextual;
    output.methods_agree = output.lp->cntx == output.cyclic->cntx &&
                           output.lp->contextual == output.cyclic->contextual;
  } else if (output.lp) {
    output.method = Method::Lp;
    output.cntx = output.lp->cntx;
    output.contextual = output.lp->contextual;
  } else if (output.cyclic) {
    output.method = Method::CyclicClosedForm;
    output.cntx = output.cyclic->cntx;
    output.contextual = output.cyclic->contextual;
  } else {
    fail(ErrorCode::TooLarge, "no analysis route applies");
  }
  return output;
}

namespace {

ordered_json consistency_json(const System& system, const ConsistencyReport& report) {
  ordered_json node;
  node["consistent"] = report.consistent;
  ordered_json per_object = ordered_json::object();
  Rat worst = 0;
  for (const auto& [object, discrepancy] : report.per_object_max_discrepancy) {
    per_object[object.name] = format_rational(discrepancy);
    worst = std::max(worst, discrepancy);
  }
  node["max_discrepancy"] = format_rational(worst);
  node["per_object"] = std::move(per_object);
  return node;
}

ordered_json description_json(const System& system, const CouplingSolution& description) {
  AssignmentSpace space(system);
  ordered_json node;
  node["total_eq"] = format_rational(description.total);
  ordered_json eq = ordered_json::object();
  for (const auto& [object, value] : description.per_connection_eq) {
    eq[object.name] = format_rational(value);
  }
  node["per_connection_eq"] = std::move(eq);
  ordered_json support = ordered_json::array();
  std::vector<std::size_t> digits;
  for (const auto& [index, p] : description.distribution) {
    space.decode(index, digits);
    ordered_json outcomes = ordered_json::object();
    for (std::size_t s = 0; s < space.slots().size(); ++s) {
      const SlotRef& slot = space.slots()[s];
      outcomes[slot.context.name][slot.object.name] =
          system.alphabet_of(slot.object).symbols()[digits[s]];
    }
    ordered_json entry;
    entry["p"] = format_rational(p);
    entry["outcomes"] = std::move(outcomes);
    support.push_back(std::move(entry));
  }
  node["support"] = std::move(support);
  return node;
}

}  // namespace

std::string render_json(const System& system, const AnalysisOutput& output) {
  ordered_json root;
  root["objects"] = system.object_count();
  root["contexts"] = system.context_count();
  root["consistency"] = consistency_json(system, output.consistency);

  ordered_json connections = ordered_json::object();
  for (const auto& [object, maxeq] : output.connection_maxeq) {
    ordered_json node;
    node["maxeq"] = format_rational(maxeq.value);
    ordered_json witness = ordered_json::object();
    for (const auto& [symbol, mass] : maxeq.witness_submeasure) {
      witness[symbol] = format_rational(mass);
    }
    node["witness_submeasure"] = std::move(witness);
    connections[object.name] = std::move(node);
  }
  root["connections"] = std::move(connections);
  root["maxeq_connections_sum"] = format_rational(output.maxeq_connections_sum);

  root["method"] = method_name(output.method);
  root["methods_agree"] = output.methods_agree;

  if (output.lp) {
    ordered_json node;
    node["maxeq_system"] = format_rational(output.lp->maxeq_system);
    node["cntx"] = format_rational(output.lp->cntx);
    root["lp"] = std::move(node);
  }
  if (output.cyclic) {
    const CyclicStructure& structure = output.cyclic->structure;
    ordered_json node;
    node["rank"] = structure.rank;
    ordered_json objects = ordered_json::array();
    for (const auto& object : structure.object_order) objects.push_back(object.name);
    node["object_order"] = std::move(objects);
    ordered_json contexts = ordered_json::array();
    for (const auto& context : structure.context_order) contexts.push_back(context.name);
    node["context_order"] = std::move(contexts);
    ordered_json products = ordered_json::array();
    for (const Rat& value : structure.product_expectations) {
      products.push_back(format_rational(value));
    }
    node["product_expectations"] = std::move(products);
    node["cntx"] = format_rational(output.cyclic->cntx);
    node["criterion"] = output.cyclic->contextual;
    root["cyclic"] = std::move(node);
  } else if (!output.not_cyclic_reason.empty()) {
    root["not_cyclic"] = output.not_cyclic_reason;
  }

  root["cntx"] = format_rational(output.cntx);
  root["cntx_decimal"] = format_decimal(output.cntx);
  root["contextual"] = output.contextual;
  if (output.lp && output.lp->description) {
    root["description"] = description_json(system, *output.lp->description);
  }
  return root.dump(2) + "\n";
}

std::string render_text(const System& system, const AnalysisOutput& output) {
  std::ostringstream out;
  out << "system: " << system.object_count() << " object(s), " << system.context_count()
      << " context(s)\n";
  out << "consistently connected: " << (output.consistency.consistent ? "yes" : "no") << "\n";
  for (const auto& [object, discrepancy] : output.consistency.per_object_max_discrepancy) {
    if (discrepancy != 0) {
      out << "  discrepancy " << object.name << ": " << format_rational(discrepancy) << "\n";
    }
  }
  out << "maxeq per connection:";
  for (const auto& [object, maxeq] : output.connection_maxeq) {
    out << " " << object.name << "=" << format_rational(maxeq.value);
  }
  out << "\n";
  out << "sum of connection maxeq: " << format_rational(output.maxeq_connections_sum) << "\n";
  out << "method: " << method_name(output.method);
  if (output.cyclic) out << " (cyclic rank " << output.cyclic->structure.rank << ")";
  out << "\n";
  if (output.lp) {
    out << "maxeq of system (lp): " << format_rational(output.lp->maxeq_system) << "\n";
  }
  if (output.cyclic && output.lp) {
    out << "closed form cntx: " << format_rational(output.cyclic->cntx)
        << (output.methods_agree ? " (agrees with lp)" : " (DISAGREES with lp)") << "\n";
  }
  out << "cntx: " << format_rational(output.cntx) << " (" << format_decimal(output.cntx) << ")\n";
  out << "verdict: " << (output.contextual ? "contextual" : "noncontextual") << "\n";
  if (output.lp && output.lp->description) {
    out << "noncontextual description: " << output.lp->description->distribution.size()
        << " support point(s), per-connection eq equals maxeq\n";
  }
  return out.str();
}

std::string render_consistency_text(const System& system, const ConsistencyReport& report) {
  std::ostringstream out;
  for (const auto& [object, discrepancy] : report.per_object_max_discrepancy) {
    out << object.name << ": " << format_rational(discrepancy) << "\n";
  }
  out << "verdict: " << (report.consistent ? "consistently connected" : "strictly inconsistently connected")
      << "\n";
  return out.str();
}

std::string render_consistency_json(const System& system, const ConsistencyReport& report) {
  return consistency_json(system, report).dump(2) + "\n";
}

}  // namespace cbd
