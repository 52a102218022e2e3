#ifndef ARCHOPT_REFACTOR_HPP
#define ARCHOPT_REFACTOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "archopt/model.hpp"
#include "archopt/rng.hpp"

namespace archopt {

enum class ActionKind { Redo, Move, Clon, Motn, Drop };

std::string to_string(ActionKind kind);
std::optional<ActionKind> action_kind_from_string(const std::string& name);

/// One refactoring step. Field presence depends on the kind:
///   REDO  target = component, new_instance = catalog name for the new node
///   MOVE  target = operation, destination = existing component
///   CLON  target = node
///   MOTN  target = operation, new_instance = catalog name for the new node
///   DROP  target = node
struct RefactoringAction {
    ActionKind kind = ActionKind::Move;
    std::string target;
    std::string destination;
    std::string new_instance;

    bool operator==(const RefactoringAction&) const = default;
};

inline constexpr std::size_t kMaxSequenceLength = 4;

/// The chromosome: an ordered list of at most four actions.
struct RefactoringSequence {
    std::vector<RefactoringAction> actions;

    bool operator==(const RefactoringSequence&) const = default;
    std::size_t size() const { return actions.size(); }
    bool empty() const { return actions.empty(); }
};

/// Interconnectedness of the action's target element at application time,
/// recorded so that sequence complexity can be scored after the fact.
struct ActionContext {
    ActionKind kind = ActionKind::Move;
    double degree = 0.0;
    double max_degree = 0.0;
};

using ComplexityTrace = std::vector<ActionContext>;

/// Degree of `target` in the interaction graph of its element kind, plus
/// the largest degree over that kind. Components interact through
/// scenario-step adjacency and co-residency on a node; operations through
/// adjacency and shared ownership; nodes through links and scenario hops.
ActionContext element_degree(const Architecture& arch, ActionKind kind, const std::string& target);

/// nullopt when the action's preconditions hold on `arch`.
std::optional<Violation> precheck(const RefactoringAction& action, const Architecture& arch);

/// Pure application; the input is never mutated. Throws PreconditionError
/// when precheck fails.
Architecture apply(const RefactoringAction& action, const Architecture& arch);

struct SequenceOutcome {
    bool ok = false;
    Architecture architecture;         // final on success, last valid intermediate on failure
    ComplexityTrace trace;             // one context per applied action
    std::size_t failed_index = 0;      // meaningful only when !ok
    Violation violation;               // meaningful only when !ok

    explicit operator bool() const { return ok; }
};

/// Applies actions left to right, prechecking each against the
/// intermediate architecture. Stops at the first failing action and
/// reports its index.
SequenceOutcome apply_sequence(const RefactoringSequence& seq, const Architecture& arch0);

/// Uniformly samples a kind, then uniformly valid parameters, retrying a
/// bounded number of times until precheck passes. Throws ExhaustionError
/// when the architecture admits no action within the budget.
RefactoringAction random_action(const Architecture& arch, Rng& rng);

}  // namespace archopt

#endif
