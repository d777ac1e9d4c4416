// Signature: the function and predicate symbols available to terms and prime
// formulas. Built-ins (successor, add, mul, equality) are fixed and total;
// user-registered symbols carry arities and optional total evaluators.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sntab/error.hpp"

namespace sntab {

using Nat = std::uint64_t;

using FnEval = std::function<Nat(const std::vector<Nat>&)>;
using PredEval = std::function<bool(const std::vector<Nat>&)>;

struct FnInfo {
  std::size_t arity = 0;
  FnEval eval;  // total; required for every registered function
};

struct PredInfo {
  std::size_t arity = 0;
  PredEval eval;  // null => opaque: total but with no available decider
};

class Signature {
 public:
  Signature() = default;

  // Reserved names. Successor is an AST node ("s" in concrete syntax), zero a
  // literal; add/mul/equality are interpreted natively by evaluation and the
  // term normalizer and cannot be shadowed.
  static bool reserved_function(const std::string& name) {
    return name == "s" || name == "add" || name == "mul";
  }
  static bool reserved_predicate(const std::string& name) {
    return name == "=";
  }

  void add_function(const std::string& name, std::size_t arity, FnEval eval) {
    require(!reserved_function(name) && !reserved_predicate(name),
            Errc::Signature, "cannot shadow built-in symbol '" + name + "'");
    require(static_cast<bool>(eval), Errc::Signature,
            "function '" + name + "' needs a total evaluator");
    auto it = fns_.find(name);
    if (it != fns_.end()) {
      require(it->second.arity == arity, Errc::Signature,
              "function '" + name + "' redeclared with different arity");
      it->second.eval = std::move(eval);
      return;
    }
    fns_[name] = FnInfo{arity, std::move(eval)};
  }

  // eval == nullptr registers an opaque predicate.
  void add_predicate(const std::string& name, std::size_t arity,
                     PredEval eval = nullptr) {
    require(!reserved_function(name) && !reserved_predicate(name),
            Errc::Signature, "cannot shadow built-in symbol '" + name + "'");
    auto it = preds_.find(name);
    if (it != preds_.end()) {
      require(it->second.arity == arity, Errc::Signature,
              "predicate '" + name + "' redeclared with different arity");
      if (eval) it->second.eval = std::move(eval);
      return;
    }
    preds_[name] = PredInfo{arity, std::move(eval)};
  }

  const FnInfo* function(const std::string& name) const {
    auto it = fns_.find(name);
    return it == fns_.end() ? nullptr : &it->second;
  }
  const PredInfo* predicate(const std::string& name) const {
    auto it = preds_.find(name);
    return it == preds_.end() ? nullptr : &it->second;
  }

  bool has_function(const std::string& name) const {
    return reserved_function(name) || fns_.count(name) > 0;
  }
  bool has_predicate(const std::string& name) const {
    return reserved_predicate(name) || preds_.count(name) > 0;
  }

  std::size_t function_arity(const std::string& name) const {
    if (name == "s") return 1;
    if (name == "add" || name == "mul") return 2;
    const FnInfo* f = function(name);
    require(f != nullptr, Errc::Signature, "unknown function '" + name + "'");
    return f->arity;
  }
  std::size_t predicate_arity(const std::string& name) const {
    if (name == "=") return 2;
    const PredInfo* p = predicate(name);
    require(p != nullptr, Errc::Signature, "unknown predicate '" + name + "'");
    return p->arity;
  }

  bool predicate_opaque(const std::string& name) const {
    if (name == "=") return false;
    const PredInfo* p = predicate(name);
    require(p != nullptr, Errc::Signature, "unknown predicate '" + name + "'");
    return !static_cast<bool>(p->eval);
  }

  // When parsing, unknown names in formula position are admitted as opaque
  // predicates (a deliberate convenience); unknown functions are errors.
  bool auto_admit_predicates = true;

 private:
  std::map<std::string, FnInfo> fns_;
  std::map<std::string, PredInfo> preds_;
};

}  // namespace sntab
