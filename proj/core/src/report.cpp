#include "cca/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "cca/errors.hpp"

namespace cca {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON numbers stay within int64; anything larger goes out as a decimal
// string so nothing is silently rounded.
ordered_json json_int(const Int& n) {
  if (n.fits_slong_p())
    return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

ordered_json json_ints(const std::vector<Int>& values) {
  ordered_json out = ordered_json::array();
  for (const Int& v : values) out.push_back(json_int(v));
  return out;
}

ordered_json record_json(const AnalysisRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["dim"] = r.dim;
  j["field"] = r.field;
  j["generators"] = r.generators;
  j["seed"] = r.seed;
  if (!r.e.empty()) {
    ordered_json adic;
    adic["e"] = json_ints(r.e);
    adic["h"] = json_ints(r.h);
    adic["postulation"] = r.postulation;
    j["adic"] = std::move(adic);
  }
  if (!r.e_star.empty()) {
    ordered_json closure;
    closure["e"] = json_ints(r.e_star);
    closure["h"] = json_ints(r.h_star);
    closure["postulation"] = r.postulation_star;
    j["closure"] = std::move(closure);
  }
  if (r.normal.has_value()) {
    ordered_json normality;
    normality["window"] = r.normality_window;
    normality["normal"] = *r.normal;
    if (r.closure_failing_power)
      normality["failing_power"] = *r.closure_failing_power;
    if (!r.closure_witness.empty()) normality["witness"] = r.closure_witness;
    j["normality"] = std::move(normality);
  }
  if (!r.e_star.empty()) {
    ordered_json signs;
    signs["e1_bound"] = r.signs.e1_bound;
    signs["e2_nonnegative"] = r.signs.e2_nonnegative;
    signs["e3_nonnegative"] = r.signs.e3_nonnegative;
    j["signs"] = std::move(signs);
  }
  if (r.reduction_number) {
    ordered_json reduction;
    reduction["number"] = *r.reduction_number;
    reduction["sigma"] = json_ints(r.sigma);
    reduction["attempts"] = r.reduction_attempts;
    reduction["elements"] = r.reduction_elements;
    j["reduction"] = std::move(reduction);
  }
  if (r.cm) {
    ordered_json graded;
    graded["cohen_macaulay"] = r.cm->cohen_macaulay;
    graded["checked_upto"] = r.cm->checked_upto;
    if (r.cm->failing_stage) graded["failing_stage"] = *r.cm->failing_stage;
    j["graded"] = std::move(graded);
  }
  j["classification"] = to_string(r.verdict.cls);
  if (!r.verdict.reason.empty()) j["reason"] = r.verdict.reason;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string int_cell(const std::vector<Int>& values, std::size_t i) {
  return i < values.size() ? to_string(values[i]) : std::string();
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

std::string int_tuple(const std::vector<Int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += to_string(values[i]);
  }
  return out + ")";
}

}  // namespace

ReportFormat format_from_name(const std::string& name) {
  if (name == "jsonl" || name == "json-lines") return ReportFormat::jsonl;
  if (name == "csv") return ReportFormat::csv;
  if (name == "table") return ReportFormat::table;
  throw DomainError("unknown report format: " + name);
}

std::string render_jsonl(const std::vector<AnalysisRecord>& records) {
  std::string out;
  for (const AnalysisRecord& r : records) {
    out += record_json(r).dump();
    out += "\n";
  }
  return out;
}

std::string render_csv(const std::vector<AnalysisRecord>& records) {
  std::string out =
      "id,dim,num_gens,e0,e1,e2,e3,e0_star,e1_star,e2_star,e3_star,"
      "red,normal,cm,classification\n";
  for (const AnalysisRecord& r : records) {
    std::vector<std::string> cells;
    cells.push_back(r.id);
    cells.push_back(std::to_string(r.dim));
    cells.push_back(std::to_string(r.generators.size()));
    for (std::size_t i = 0; i < 4; ++i) cells.push_back(int_cell(r.e, i));
    for (std::size_t i = 0; i < 4; ++i) cells.push_back(int_cell(r.e_star, i));
    cells.push_back(r.reduction_number
                        ? std::to_string(*r.reduction_number)
                        : std::string());
    cells.push_back(r.normal ? bool_cell(*r.normal) : std::string());
    cells.push_back(r.cm ? bool_cell(r.cm->cohen_macaulay) : std::string());
    cells.push_back(to_string(r.verdict.cls));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ",";
      out += cells[i];
    }
    out += "\n";
  }
  return out;
}

std::string render_table(const std::vector<AnalysisRecord>& records) {
  const std::vector<std::string> header = {"id",     "dim",  "gens",
                                           "e",      "e*",   "red",
                                           "normal", "cm",   "class",
                                           "seconds"};
  std::vector<std::vector<std::string>> rows;
  rows.push_back(header);
  for (const AnalysisRecord& r : records) {
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f", r.seconds);
    rows.push_back({r.id, std::to_string(r.dim),
                    std::to_string(r.generators.size()), int_tuple(r.e),
                    int_tuple(r.e_star),
                    r.reduction_number ? std::to_string(*r.reduction_number)
                                       : std::string("-"),
                    r.normal ? bool_cell(*r.normal) : std::string("-"),
                    r.cm ? bool_cell(r.cm->cohen_macaulay) : std::string("-"),
                    to_string(r.verdict.cls), seconds});
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());

  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      if (i + 1 < row.size()) out += std::string(widths[i] - row[i].size(), ' ');
    }
    out += "\n";
  }

  std::size_t normal = 0, e3_zero = 0, applicable = 0, verified = 0,
              vacuous = 0, candidates = 0, unresolved = 0;
  for (const AnalysisRecord& r : records) {
    const bool is_normal = r.normal == true;
    const bool has_e3 = r.e_star.size() > 3;
    const bool e3z = has_e3 && r.e_star[3] == 0;
    normal += is_normal;
    e3_zero += e3z;
    applicable += r.dim == 3 && is_normal && e3z;
    switch (r.verdict.cls) {
      case InstanceClass::verified: ++verified; break;
      case InstanceClass::vacuous: ++vacuous; break;
      case InstanceClass::counterexample_candidate: ++candidates; break;
      case InstanceClass::unresolved: ++unresolved; break;
    }
  }
  out += "\n";
  out += "instances                 " + std::to_string(records.size()) + "\n";
  out += "normal                    " + std::to_string(normal) + "\n";
  out += "e3_star zero              " + std::to_string(e3_zero) + "\n";
  out += "theorem applicable        " + std::to_string(applicable) + "\n";
  out += "verified                  " + std::to_string(verified) + "\n";
  out += "vacuous                   " + std::to_string(vacuous) + "\n";
  out += "counterexample candidates " + std::to_string(candidates) + "\n";
  out += "unresolved                " + std::to_string(unresolved) + "\n";
  return out;
}

std::string render_report(const std::vector<AnalysisRecord>& records,
                          ReportFormat format) {
  switch (format) {
    case ReportFormat::jsonl: return render_jsonl(records);
    case ReportFormat::csv: return render_csv(records);
    case ReportFormat::table: return render_table(records);
  }
  throw DomainError("unknown report format");
}

IdealInput parse_ideal_input(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& failure) {
    throw DomainError(std::string("bad ideal input: ") + failure.what());
  }
  if (!j.is_object()) throw DomainError("ideal input must be a JSON object");
  for (const auto& item : j.items())
    if (item.key() != "vars" && item.key() != "field" &&
        item.key() != "generators" && item.key() != "id" &&
        item.key() != "seed")
      throw DomainError("unknown key in ideal input: " + item.key());
  if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
    throw DomainError("ideal input needs a nonempty \"vars\" array");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw DomainError("ideal input needs a \"generators\" array");

  IdealInput input;
  try {
    std::vector<std::string> vars =
        j["vars"].get<std::vector<std::string>>();
    std::vector<std::string> gens =
        j["generators"].get<std::vector<std::string>>();
    input.id = j.value("id", std::string("input"));
    input.seed = j.value("seed", std::uint64_t{1});
    const std::string field_name = j.value("field", std::string("Q"));
    input.ring = make_ring(std::move(vars), field_from_name(field_name));
    input.ideal = ideal_from_strings(input.ring, gens);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& failure) {
    throw DomainError(std::string("bad ideal input: ") + failure.what());
  }
  input.mono = as_monomial_ideal(input.ideal);
  return input;
}

CorpusInstance instance_from_input(const IdealInput& input) {
  CorpusInstance inst;
  inst.id = input.id;
  inst.ideal = input.ideal;
  inst.mono = input.mono;
  inst.seed = input.seed;
  return inst;
}

std::string render_corpus_jsonl(const Corpus& corpus) {
  std::string out;
  for (const CorpusInstance& inst : corpus.instances) {
    ordered_json j;
    j["id"] = inst.id;
    j["vars"] = inst.ideal.ring->vars;
    j["field"] = inst.ideal.ring->field.name();
    j["generators"] = generator_strings(inst.ideal);
    j["seed"] = inst.seed;
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace cca
