#pragma once

#include "pcgc/functions.hpp"
#include "pcgc/galois.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcgc {

// --- programs --------------------------------------------------------------

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct Expr {
  enum class Op { lit, var, add, sub, mul };
  Op op = Op::lit;
  std::int64_t value = 0;  // lit
  std::string name;        // var
  std::size_t var = 0;     // var: index into Program::vars
  std::unique_ptr<Expr> lhs, rhs;
  SourcePos pos;
};

enum class CmpOp { lt, le, eq, ne, gt, ge };
std::string_view to_string(CmpOp op);

struct Cond {
  CmpOp op = CmpOp::lt;
  std::unique_ptr<Expr> lhs, rhs;
};

struct Stmt {
  enum class Kind { assign, while_loop, if_else, skip };
  Kind kind = Kind::skip;
  std::string target;      // assign
  std::size_t var = 0;     // assign: index into Program::vars
  std::unique_ptr<Expr> expr;
  Cond cond;               // while, if
  std::vector<Stmt> body;  // while body, then-branch
  std::vector<Stmt> orelse;
  SourcePos pos;
  /// Program point before this statement; for a loop, its head.
  std::size_t label = 0;
};

struct Program {
  std::vector<Stmt> stmts;
  /// Variables in order of first appearance.
  std::vector<std::string> vars;
  /// Labels L0 .. L(n-1) in statement preorder, then the exit label.
  std::size_t exit_label = 0;
  std::size_t num_labels() const { return exit_label + 1; }
};

/// Throws SyntaxError ("line:col: expected ..., got ...") and UseBeforeAssign.
Program parse_program(std::string_view text);

/// Source rendering of an expression (fully parenthesized binary nodes).
std::string to_string(const Expr& e);

// --- abstract interpretation -----------------------------------------------

/// Abstract element per program variable, indexed like Program::vars.
using AbstractState = std::vector<std::size_t>;

struct PointInfo {
  std::size_t label = 0;
  SourcePos pos;
  std::string what;  // "assign", "while", "if", "skip", "exit"
};

struct AnalysisResult {
  std::vector<std::string> vars;
  std::vector<PointInfo> points;      // indexed by label
  std::vector<AbstractState> states;  // indexed by label
  /// Loop-head updates across all loops.
  std::size_t iterations = 0;
  /// Loop heads in label order, with the sequence of states each went through.
  std::map<std::size_t, std::vector<AbstractState>> head_chains;
};

/// Non-relational analysis over the abstract lattice of a PCGC on an integer
/// carrier. Operators are the best correct approximations of saturating (or
/// modular, per carrier) +, -, * computed once at construction. Conditions
/// do not refine states; loop heads are joined until stable.
class Analyzer {
 public:
  /// Throws DomainMismatch unless `c` is a PCGC with a lattice over an
  /// integer carrier.
  explicit Analyzer(ConstructiveConnection c);
  /// Accepts a constructive connection, or a partitioning GC through t_pcgc.
  static Analyzer for_domain(const Domain& d);

  const ConstructiveConnection& domain() const noexcept { return c_; }
  const Lattice& lattice() const noexcept { return *lattice_; }
  const AbstractFn& op_table(Expr::Op op) const;

  /// Compositional evaluation. Throws UnknownVariable.
  std::size_t eval(const Expr& e, const std::map<std::string, std::size_t>& env) const;
  std::size_t eval(const Expr& e, const AbstractState& state) const;

  /// Throws InvariantViolated if a loop head fails the fixpoint post-check.
  AnalysisResult run(const Program& p) const;

  /// "{x ↦ >0, y ↦ 2}".
  std::string format_state(const std::vector<std::string>& vars, const AbstractState& s) const;

 private:
  AbstractState exec(const std::vector<Stmt>& stmts, AbstractState s, AnalysisResult& out) const;
  AbstractState join(const AbstractState& a, const AbstractState& b) const;

  ConstructiveConnection c_;
  const Lattice* lattice_ = nullptr;
  AbstractFn add_, sub_, mul_;
};

/// Text report, one line per program point: "Lk: {x ↦ >0, y ↦ 2}".
std::string format_text(const Analyzer& a, const AnalysisResult& r);
/// Nested JSON mirroring AnalysisResult, as text.
std::string format_json(const Analyzer& a, const AnalysisResult& r);

// --- concrete semantics ----------------------------------------------------

inline constexpr std::size_t kStepBudget = 10'000;

/// Variable values at one visit of a program point (nullopt: unassigned).
struct Observation {
  std::size_t label = 0;
  std::vector<std::optional<std::int64_t>> env;
};

struct ConcreteRun {
  std::vector<Observation> observations;
  bool finished = false;  // false when the step budget ran out
  std::size_t steps = 0;
};

/// Executes the program over `carrier` values (arithmetic per the carrier's
/// mode). Each statement execution and each loop test is one step.
ConcreteRun run_concrete(const Program& p, const Carrier& carrier, std::size_t budget = kStepBudget);

struct SoundnessViolation {
  std::size_t label = 0;
  std::string var;
  std::int64_t value = 0;
  std::string abstract;
};

/// Observed values v with η(v) not below the analyzer's value at that point.
std::vector<SoundnessViolation> soundness_violations(const Analyzer& a, const AnalysisResult& r,
                                                     const ConcreteRun& run);

}  // namespace pcgc
