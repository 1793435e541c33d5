#include "tomex/state.hpp"

#include <algorithm>

#include "tomex/error.hpp"

namespace tomex {

std::string_view to_string(RevisionOperator op) noexcept {
  switch (op) {
    case RevisionOperator::prioritized: return "prioritized";
    case RevisionOperator::dalal: return "dalal";
  }
  return "prioritized";
}

RevisionOperator parse_revision_operator(std::string_view name) {
  if (name == "prioritized") return RevisionOperator::prioritized;
  if (name == "dalal") return RevisionOperator::dalal;
  throw Error(ErrorCode::InvalidArgument,
              "unknown revision operator '" + std::string(name) + "' (expected prioritized or dalal)");
}

std::vector<Formula> flatten(const StratifiedBase& base) {
  std::vector<Formula> out;
  for (const auto& stratum : base) out.insert(out.end(), stratum.begin(), stratum.end());
  return out;
}

RevisionOperator Frame::operator_of(const AgentId& agent) const {
  auto it = operators.find(agent);
  return it == operators.end() ? RevisionOperator::prioritized : it->second;
}

std::shared_ptr<const Frame> make_frame(Vocabulary vocabulary, std::vector<AgentId> agents,
                                        std::vector<Formula> laws,
                                        std::map<AgentId, RevisionOperator> operators) {
  auto frame = std::make_shared<Frame>();
  WorldSet law_worlds = WorldSet::all(vocabulary.size());
  for (const auto& law : laws) {
    if (!law.is_modal_free()) {
      throw Error(ErrorCode::ModalFormulaNotAllowed, "law must be propositional: " + render(law));
    }
    law_worlds = law_worlds & models_of(law, vocabulary);
  }
  if (law_worlds.empty()) throw Error(ErrorCode::InconsistentLaws, "the laws are jointly inconsistent");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (agents[i] == agents[j]) {
        throw Error(ErrorCode::InvalidArgument, "duplicate agent '" + agents[i].name() + "'");
      }
    }
  }
  for (const auto& [agent, op] : operators) {
    (void)op;
    if (std::find(agents.begin(), agents.end(), agent) == agents.end()) {
      throw Error(ErrorCode::UnknownAgent, "operator assigned to unknown agent '" + agent.name() + "'");
    }
  }
  frame->vocabulary = std::move(vocabulary);
  frame->agents = std::move(agents);
  frame->laws = std::move(laws);
  frame->law_worlds = std::move(law_worlds);
  frame->operators = std::move(operators);
  return frame;
}

// ---------------------------------------------------------------------------

struct EpistemicState::Data {
  std::shared_ptr<const Frame> frame;
  AgentId owner;
  StratifiedBase base;
  WorldSet worlds;
  ModelMap models;
  unsigned depth = 0;
  RevisionOperator op = RevisionOperator::prioritized;
};

EpistemicState::EpistemicState(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

namespace {

WorldSet base_worlds(const Frame& frame, const StratifiedBase& base) {
  WorldSet worlds = frame.law_worlds;
  for (const auto& stratum : base) {
    for (const auto& f : stratum) {
      if (!f.is_modal_free()) {
        throw Error(ErrorCode::ModalFormulaNotAllowed,
                    "belief base members must be propositional: " + render(f));
      }
      worlds = worlds & models_of(f, frame.vocabulary);
    }
  }
  return worlds;
}

}  // namespace

EpistemicState EpistemicState::from_base(std::shared_ptr<const Frame> frame, AgentId owner,
                                         StratifiedBase base, unsigned depth, ModelMap models) {
  const RevisionOperator op = frame->operator_of(owner);
  return from_base(std::move(frame), std::move(owner), std::move(base), depth, op, std::move(models));
}

EpistemicState EpistemicState::from_base(std::shared_ptr<const Frame> frame, AgentId owner,
                                         StratifiedBase base, unsigned depth, RevisionOperator op,
                                         ModelMap models) {
  if (depth == 0 && !models.empty()) {
    throw Error(ErrorCode::DepthViolation, "a depth-0 state cannot hold nested models");
  }
  for (const auto& [agent, model] : models) {
    if (agent == owner) {
      throw Error(ErrorCode::InvalidArgument, "the self model is implicit and cannot be stored");
    }
    if (model.depth() >= depth) {
      throw Error(ErrorCode::DepthViolation, "nested model of '" + agent.name() + "' is not shallower");
    }
  }
  auto data = std::make_shared<Data>(Data{frame, std::move(owner), std::move(base), WorldSet{},
                                          std::move(models), depth, op});
  data->worlds = base_worlds(*frame, data->base);
  return EpistemicState(std::move(data));
}

EpistemicState EpistemicState::from_worlds(std::shared_ptr<const Frame> frame, AgentId owner,
                                           const WorldSet& worlds, unsigned depth,
                                           RevisionOperator op, ModelMap models) {
  const WorldSet kept = worlds & frame->law_worlds;
  StratifiedBase base;
  auto clauses = excluding_clauses(kept, frame->law_worlds, frame->vocabulary);
  if (!clauses.empty()) base.push_back(std::move(clauses));
  return from_base(std::move(frame), std::move(owner), std::move(base), depth, op, std::move(models));
}

EpistemicState EpistemicState::ignorant(std::shared_ptr<const Frame> frame, AgentId owner,
                                        unsigned depth) {
  ModelMap models;
  if (depth > 0) {
    for (const auto& agent : frame->agents) {
      if (agent == owner) continue;
      models.emplace(agent, ignorant(frame, agent, depth - 1));
    }
  }
  const RevisionOperator op = frame->operator_of(owner);
  auto data = std::make_shared<Data>(
      Data{frame, std::move(owner), {}, frame->law_worlds, std::move(models), depth, op});
  return EpistemicState(std::move(data));
}

const AgentId& EpistemicState::owner() const noexcept { return data_->owner; }
const Frame& EpistemicState::frame() const noexcept { return *data_->frame; }
const std::shared_ptr<const Frame>& EpistemicState::frame_ptr() const noexcept { return data_->frame; }
const StratifiedBase& EpistemicState::base() const noexcept { return data_->base; }
const WorldSet& EpistemicState::worlds() const noexcept { return data_->worlds; }
unsigned EpistemicState::depth() const noexcept { return data_->depth; }
RevisionOperator EpistemicState::revision_operator() const noexcept { return data_->op; }
const EpistemicState::ModelMap& EpistemicState::models() const noexcept { return data_->models; }

EpistemicState EpistemicState::model_of(const AgentId& agent) const {
  if (agent == owner()) return *this;
  auto it = data_->models.find(agent);
  if (it != data_->models.end()) return it->second;
  return ignorant(data_->frame, agent, depth() == 0 ? 0 : depth() - 1);
}

EpistemicState EpistemicState::with_model(const AgentId& agent, EpistemicState model) const {
  if (agent == owner()) return model;
  if (depth() == 0) return *this;
  auto data = std::make_shared<Data>(*data_);
  data->models.insert_or_assign(agent, std::move(model));
  return EpistemicState(std::move(data));
}

EpistemicState EpistemicState::with_beliefs(StratifiedBase base, WorldSet worlds) const {
  auto data = std::make_shared<Data>(*data_);
  data->base = std::move(base);
  data->worlds = std::move(worlds);
  return EpistemicState(std::move(data));
}

bool operator==(const EpistemicState& a, const EpistemicState& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.owner == y.owner && x.depth == y.depth && x.op == y.op && x.worlds == y.worlds &&
         x.base == y.base && x.models == y.models && x.frame->laws == y.frame->laws &&
         x.frame->vocabulary == y.frame->vocabulary;
}

// ---------------------------------------------------------------------------

StateVector::StateVector(std::map<AgentId, EpistemicState> states) : states_(std::move(states)) {
  for (const auto& [agent, state] : states_) {
    if (!(state.owner() == agent)) {
      throw Error(ErrorCode::InvalidArgument,
                  "state vector entry '" + agent.name() + "' holds a state owned by '" +
                      state.owner().name() + "'");
    }
  }
}

const EpistemicState& StateVector::at(const AgentId& agent) const {
  auto it = states_.find(agent);
  if (it == states_.end()) {
    throw Error(ErrorCode::UnknownAgent, "no epistemic state for agent '" + agent.name() + "'");
  }
  return it->second;
}

StateVector StateVector::with(const AgentId& agent, EpistemicState state) const {
  StateVector out = *this;
  out.states_.insert_or_assign(agent, std::move(state));
  return out;
}

std::vector<AgentId> StateVector::agents() const {
  std::vector<AgentId> out;
  for (const auto& [agent, state] : states_) out.push_back(agent);
  return out;
}

}  // namespace tomex
