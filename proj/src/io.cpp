#include "cbd/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cbd {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax_error_at(const std::string& text, std::size_t byte,
                                  const std::string& what) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  fail(ErrorCode::SyntaxError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

void reject_unknown_keys(const json& node, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : node.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end()) {
      fail(ErrorCode::SyntaxError, "unknown key '" + key + "' in " + where);
    }
  }
}

std::string require_string(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key) || !node[key].is_string()) {
    fail(ErrorCode::SyntaxError, "missing or non-string '" + std::string(key) + "' in " + where);
  }
  return node[key].get<std::string>();
}

const json& require_array(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key) || !node[key].is_array()) {
    fail(ErrorCode::SyntaxError, "missing or non-array '" + std::string(key) + "' in " + where);
  }
  return node[key];
}

}  // namespace

System parse_system(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax_error_at(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!root.is_object()) fail(ErrorCode::SyntaxError, "top level must be an object");
  reject_unknown_keys(root, {"objects", "contexts"}, "top level");

  std::vector<ObjectDecl> objects;
  for (const json& node : require_array(root, "objects", "top level")) {
    if (!node.is_object()) fail(ErrorCode::SyntaxError, "object entry must be an object");
    reject_unknown_keys(node, {"id", "alphabet"}, "object entry");
    std::string id = require_string(node, "id", "object entry");
    std::vector<std::string> symbols;
    for (const json& symbol : require_array(node, "alphabet", "object '" + id + "'")) {
      if (!symbol.is_string()) {
        fail(ErrorCode::SyntaxError, "alphabet of object '" + id + "' must hold strings");
      }
      symbols.push_back(symbol.get<std::string>());
    }
    objects.push_back(ObjectDecl{ObjectId{id}, Alphabet{symbols}});
  }

  std::vector<BunchDecl> bunches;
  for (const json& node : require_array(root, "contexts", "top level")) {
    if (!node.is_object()) fail(ErrorCode::SyntaxError, "context entry must be an object");
    reject_unknown_keys(node, {"id", "members", "distribution"}, "context entry");
    BunchDecl decl;
    decl.context = ContextId{require_string(node, "id", "context entry")};
    const std::string where = "context '" + decl.context.name + "'";
    for (const json& member : require_array(node, "members", where)) {
      if (!member.is_string()) fail(ErrorCode::SyntaxError, "members of " + where + " must be strings");
      decl.members.push_back(ObjectId{member.get<std::string>()});
    }
    for (const json& entry : require_array(node, "distribution", where)) {
      if (!entry.is_object()) fail(ErrorCode::SyntaxError, "distribution entry of " + where + " must be an object");
      reject_unknown_keys(entry, {"outcome", "p"}, "distribution entry of " + where);
      OutcomeTuple tuple;
      for (const json& symbol : require_array(entry, "outcome", where)) {
        if (!symbol.is_string()) fail(ErrorCode::SyntaxError, "outcome of " + where + " must hold strings");
        tuple.push_back(symbol.get<std::string>());
      }
      if (tuple.size() != decl.members.size()) {
        fail(ErrorCode::SyntaxError,
             "outcome tuple of arity " + std::to_string(tuple.size()) + " in " + where +
                 " (expected " + std::to_string(decl.members.size()) + ")");
      }
      Rat p = parse_rational(require_string(entry, "p", "distribution entry of " + where));
      decl.entries.emplace_back(std::move(tuple), std::move(p));
    }
    bunches.push_back(std::move(decl));
  }
  return build_system(objects, bunches);
}

System load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_system(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string serialize_system(const System& system) {
  ordered_json root;
  root["objects"] = ordered_json::array();
  for (const auto& [id, alphabet] : system.objects()) {
    ordered_json node;
    node["id"] = id.name;
    node["alphabet"] = alphabet.symbols();
    root["objects"].push_back(std::move(node));
  }
  root["contexts"] = ordered_json::array();
  for (const auto& [id, bunch] : system.bunches()) {
    ordered_json node;
    node["id"] = id.name;
    ordered_json members = ordered_json::array();
    for (const auto& member : bunch.members) members.push_back(member.name);
    node["members"] = std::move(members);
    ordered_json distribution = ordered_json::array();
    for (const auto& [tuple, p] : bunch.table) {
      ordered_json entry;
      entry["outcome"] = tuple;
      entry["p"] = format_rational(p);
      distribution.push_back(std::move(entry));
    }
    node["distribution"] = std::move(distribution);
    root["contexts"].push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line, std::size_t row_number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) {
    fail(ErrorCode::SyntaxError, "row " + std::to_string(row_number) + ": unterminated quote");
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::vector<TrialRecord> parse_trials_csv(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  if (lines.empty()) fail(ErrorCode::EmptyInput, "empty trial file");
  if (lines[0] != "trial_id,context,object,value") {
    fail(ErrorCode::SyntaxError, "row 1: header must be 'trial_id,context,object,value'");
  }

  std::map<std::string, TrialRecord> trials;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    std::vector<std::string> fields = split_csv_row(lines[row], row + 1);
    if (fields.size() != 4) {
      fail(ErrorCode::SyntaxError, "row " + std::to_string(row + 1) + ": expected 4 fields, got " +
                                       std::to_string(fields.size()));
    }
    for (const std::string& f : fields) {
      if (f.empty()) {
        fail(ErrorCode::SyntaxError, "row " + std::to_string(row + 1) + ": empty field");
      }
    }
    auto [it, inserted] = trials.try_emplace(fields[0]);
    TrialRecord& trial = it->second;
    if (inserted) {
      trial.trial_id = fields[0];
      trial.context = ContextId{fields[1]};
    } else if (trial.context.name != fields[1]) {
      fail(ErrorCode::SyntaxError, "row " + std::to_string(row + 1) + ": trial '" + fields[0] +
                                       "' spans contexts '" + trial.context.name + "' and '" +
                                       fields[1] + "'");
    }
    if (!trial.outcomes.emplace(ObjectId{fields[2]}, fields[3]).second) {
      fail(ErrorCode::SyntaxError, "row " + std::to_string(row + 1) + ": object '" + fields[2] +
                                       "' measured twice in trial '" + fields[0] + "'");
    }
  }
  if (trials.empty()) fail(ErrorCode::EmptyInput, "trial file has a header but no rows");

  std::vector<TrialRecord> records;
  records.reserve(trials.size());
  for (auto& [id, trial] : trials) records.push_back(std::move(trial));
  return records;
}

std::vector<TrialRecord> load_trials_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_trials_csv(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

EstimationReport estimate_from_trials(const std::vector<TrialRecord>& records,
                                      std::uint64_t warn_threshold) {
  if (records.empty()) fail(ErrorCode::EmptyInput, "no trial records");

  std::map<ContextId, std::set<ObjectId>> membership;
  std::map<ContextId, std::uint64_t> counts;
  std::map<ObjectId, std::set<std::string>> observed;
  for (const TrialRecord& record : records) {
    if (record.outcomes.empty()) {
      fail(ErrorCode::EmptyContext, "trial '" + record.trial_id + "' has no outcomes");
    }
    std::set<ObjectId> these;
    for (const auto& [object, symbol] : record.outcomes) {
      these.insert(object);
      observed[object].insert(symbol);
    }
    auto [it, inserted] = membership.try_emplace(record.context, these);
    if (!inserted && it->second != these) {
      fail(ErrorCode::InconsistentMembership,
           "context '" + record.context.name + "' appears with different object sets");
    }
    ++counts[record.context];
  }

  std::vector<ObjectDecl> objects;
  for (const auto& [object, symbols] : observed) {
    bool plus_minus = std::all_of(symbols.begin(), symbols.end(), [](const std::string& s) {
      return s == "+1" || s == "-1";
    });
    std::vector<std::string> alphabet;
    if (plus_minus) {
      alphabet = {"+1", "-1"};
    } else if (symbols.size() >= 2) {
      alphabet.assign(symbols.begin(), symbols.end());
    } else {
      fail(ErrorCode::AlphabetMismatch,
           "object '" + object.name + "' has a single observed outcome '" + *symbols.begin() +
               "'; cannot infer an alphabet of at least 2 symbols");
    }
    objects.push_back(ObjectDecl{object, Alphabet{alphabet}});
  }

  // Member order of estimated contexts is sorted object id, which keeps
  // estimation invariant under any reordering of the input records.
  std::map<ContextId, std::map<OutcomeTuple, std::uint64_t>> tallies;
  for (const TrialRecord& record : records) {
    OutcomeTuple tuple;
    for (const auto& [object, symbol] : record.outcomes) tuple.push_back(symbol);
    ++tallies[record.context][tuple];
  }

  std::vector<BunchDecl> bunches;
  for (const auto& [context, tally] : tallies) {
    BunchDecl decl;
    decl.context = context;
    decl.members.assign(membership[context].begin(), membership[context].end());
    const Rat total = counts[context];
    for (const auto& [tuple, count] : tally) {
      decl.entries.emplace_back(tuple, Rat(count) / total);
    }
    bunches.push_back(std::move(decl));
  }

  EstimationReport report{build_system(objects, bunches), counts, {}};
  for (const auto& [context, count] : counts) {
    if (count < warn_threshold) {
      report.warnings.push_back("context '" + context.name + "' has only " +
                                std::to_string(count) + " trial(s)");
    }
  }
  return report;
}

}  // namespace cbd
