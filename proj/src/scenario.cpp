#include "tomex/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tomex/error.hpp"

namespace tomex {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw Error(ErrorCode::ParseError, where + ": " + message);
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail("scenario", std::string("missing key '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where, "expected a list of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) fail(where, "expected a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Formula parse_at(const std::string& text, const Scenario& s, const std::string& where) {
  try {
    return parse(text, s.vocabulary, s.agents);
  } catch (const SyntaxError& e) {
    fail(where, e.what());
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

Formula parse_propositional(const std::string& text, const Scenario& s, const std::string& where) {
  Formula f = parse_at(text, s, where);
  if (!f.is_modal_free()) {
    throw Error(ErrorCode::ModalFormulaNotAllowed,
                where + ": belief bases and laws must be propositional, got " + text);
  }
  return f;
}

StratifiedBase parse_strata(const json& value, const Scenario& s, const std::string& where) {
  if (!value.is_array()) fail(where, "expected a list of strata");
  StratifiedBase base;
  for (std::size_t k = 0; k < value.size(); ++k) {
    const std::string stratum_where = where + "[" + std::to_string(k) + "]";
    Stratum stratum;
    auto texts = string_list(value[k], stratum_where);
    for (std::size_t m = 0; m < texts.size(); ++m) {
      stratum.push_back(
          parse_propositional(texts[m], s, stratum_where + "[" + std::to_string(m) + "]"));
    }
    base.push_back(std::move(stratum));
  }
  return base;
}

AgentId known_agent(const std::string& name, const Scenario& s, const std::string& where) {
  for (const auto& a : s.agents) {
    if (a.name() == name) return a;
  }
  throw Error(ErrorCode::UnknownAgent, where + ": unknown agent '" + name + "'");
}

RevisionOperator operator_named(const json& value, const std::string& where) {
  if (!value.is_string()) fail(where, "expected an operator name");
  try {
    return parse_revision_operator(value.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::vector<AgentId> parse_path(const std::string& key, const Scenario& s) {
  const std::string where = "nested." + key;
  std::vector<AgentId> path;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, '.')) path.push_back(known_agent(part, s, where));
  if (path.size() < 2 || key.back() == '.') {
    fail(where, "nested keys name at least two agents, as in \"i.j\"");
  }
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k] == path[k - 1]) {
      throw Error(ErrorCode::DepthViolation,
                  where + ": an agent's model of itself is implicit and cannot be overridden");
    }
  }
  if (path.size() - 1 > s.depth) {
    throw Error(ErrorCode::DepthViolation, where + ": nesting " + std::to_string(path.size() - 1) +
                                               " exceeds depth " + std::to_string(s.depth));
  }
  return path;
}

const std::set<std::string> kKnownKeys = {"description", "agents", "vocabulary", "laws", "depth",
                                          "operator", "beliefs", "nested", "queries"};

}  // namespace

RevisionOperator Scenario::operator_of(const AgentId& agent) const {
  auto it = operators.find(agent);
  return it == operators.end() ? default_operator : it->second;
}

std::shared_ptr<const Frame> Scenario::frame() const {
  std::map<AgentId, RevisionOperator> ops;
  for (const auto& a : agents) ops.emplace(a, operator_of(a));
  return make_frame(vocabulary, agents, laws, std::move(ops));
}

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail("scenario", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("scenario", "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!kKnownKeys.count(key)) fail("scenario", "unknown key '" + key + "'");
  }

  Scenario s;
  if (doc.contains("description")) {
    if (!doc["description"].is_string()) fail("description", "expected a string");
    s.description = doc["description"].get<std::string>();
  }
  for (const auto& name : string_list(require(doc, "agents"), "agents")) {
    if (!is_valid_agent_name(name)) fail("agents", "invalid agent name '" + name + "'");
    for (const auto& a : s.agents) {
      if (a.name() == name) fail("agents", "duplicate agent '" + name + "'");
    }
    s.agents.emplace_back(name);
  }
  if (s.agents.empty()) fail("agents", "at least one agent is required");
  try {
    s.vocabulary = Vocabulary(string_list(require(doc, "vocabulary"), "vocabulary"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail("vocabulary", e.what());
  }
  if (s.vocabulary.empty()) fail("vocabulary", "at least one symbol is required");

  if (doc.contains("depth")) {
    const json& d = doc["depth"];
    if (!d.is_number_integer() || d.get<long long>() < 0 || d.get<long long>() > 8) {
      fail("depth", "expected an integer between 0 and 8");
    }
    s.depth = static_cast<unsigned>(d.get<long long>());
  }

  if (doc.contains("operator")) {
    const json& op = doc["operator"];
    if (op.is_object()) {
      for (const auto& [key, value] : op.items()) {
        if (key == "default") {
          s.default_operator = operator_named(value, "operator.default");
        } else {
          s.operators[known_agent(key, s, "operator")] = operator_named(value, "operator." + key);
        }
      }
    } else {
      s.default_operator = operator_named(op, "operator");
    }
  }

  if (doc.contains("laws")) {
    auto texts = string_list(doc["laws"], "laws");
    for (std::size_t k = 0; k < texts.size(); ++k) {
      s.laws.push_back(parse_propositional(texts[k], s, "laws[" + std::to_string(k) + "]"));
    }
  }

  if (doc.contains("beliefs")) {
    const json& beliefs = doc["beliefs"];
    if (!beliefs.is_object()) fail("beliefs", "expected an object keyed by agent");
    for (const auto& [key, value] : beliefs.items()) {
      s.beliefs[known_agent(key, s, "beliefs")] = parse_strata(value, s, "beliefs." + key);
    }
  }

  if (doc.contains("nested")) {
    const json& nested = doc["nested"];
    if (!nested.is_object()) fail("nested", "expected an object keyed by agent path");
    for (const auto& [key, value] : nested.items()) {
      s.nested[parse_path(key, s)] = parse_strata(value, s, "nested." + key);
    }
  }

  if (doc.contains("queries")) {
    const json& queries = doc["queries"];
    if (!queries.is_array()) fail("queries", "expected a list");
    for (std::size_t k = 0; k < queries.size(); ++k) {
      const std::string where = "queries[" + std::to_string(k) + "]";
      const json& q = queries[k];
      std::string text;
      std::optional<bool> expected;
      if (q.is_string()) {
        text = q.get<std::string>();
      } else if (q.is_object() && q.contains("formula") && q["formula"].is_string()) {
        text = q["formula"].get<std::string>();
        if (q.contains("expected")) {
          if (!q["expected"].is_boolean()) fail(where, "'expected' must be a boolean");
          expected = q["expected"].get<bool>();
        }
      } else {
        fail(where, "expected a formula string or {\"formula\": ..., \"expected\": ...}");
      }
      s.queries.push_back({text, parse_at(text, s, where), expected});
    }
  }

  // Validates the laws and the operator table eagerly.
  (void)s.frame();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read scenario file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

namespace {

std::string path_name(const std::vector<AgentId>& path) {
  std::string out;
  for (const auto& a : path) out += (out.empty() ? "" : ".") + a.name();
  return out;
}

EpistemicState build_node(const Scenario& s, const std::shared_ptr<const Frame>& frame,
                          std::vector<AgentId>& path, std::vector<std::string>& warnings) {
  const AgentId owner = path.back();
  const unsigned depth = s.depth - static_cast<unsigned>(path.size() - 1);

  EpistemicState::ModelMap models;
  if (depth > 0) {
    for (const auto& other : s.agents) {
      if (other == owner) continue;
      path.push_back(other);
      models.emplace(other, build_node(s, frame, path, warnings));
      path.pop_back();
    }
  }

  StratifiedBase base;
  if (path.size() == 1) {
    if (auto it = s.beliefs.find(owner); it != s.beliefs.end()) base = it->second;
  } else if (auto it = s.nested.find(path); it != s.nested.end()) {
    base = it->second;
  }
  EpistemicState state = EpistemicState::from_base(frame, owner, std::move(base), depth,
                                                   s.operator_of(owner), std::move(models));
  if (!state.consistent()) {
    warnings.push_back("beliefs of '" + path_name(path) +
                       "' contradict the laws; using the inconsistent state");
  }
  return state;
}

}  // namespace

BuildResult build_vector(const Scenario& scenario) {
  const auto frame = scenario.frame();
  BuildResult result;
  std::map<AgentId, EpistemicState> states;
  for (const auto& agent : scenario.agents) {
    std::vector<AgentId> path{agent};
    states.emplace(agent, build_node(scenario, frame, path, result.warnings));
  }
  result.vector = StateVector(std::move(states));
  return result;
}

}  // namespace tomex
