// Error taxonomy shared by the whole library: one exception type with a
// machine-readable code, so the CLI can map failures onto exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace sntab {

enum class Errc {
  Syntax,          // text does not parse
  Signature,       // unknown/ill-used function or predicate symbol
  Capture,         // substitution would capture a variable
  Part,            // a path does not denote a part of the sequent
  WrongShape,      // rule/transformation applied to a part of the wrong shape
  WrongSystem,     // rule or axiom not available in the requested system
  EigenNotFresh,   // eigenvariable occurs free in the conclusion
  NotInvertible,   // inversion genuinely fails for this proof
  Undecomposable,  // disjunction/witness extraction cannot split this proof
  SideCondition,   // restricted-cut side condition violated
  OracleUnknown,   // quantifier-free oracle could not certify or refute
  NotProvable,     // transformation target has no derivation (documented gaps)
  BadProof,        // proof file malformed or internally inconsistent
  Budget,          // search budget exhausted
  Internal,        // invariant breach: indicates a bug, not a user error
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Syntax: return "syntax";
    case Errc::Signature: return "signature";
    case Errc::Capture: return "capture";
    case Errc::Part: return "part";
    case Errc::WrongShape: return "wrong-shape";
    case Errc::WrongSystem: return "wrong-system";
    case Errc::EigenNotFresh: return "eigen-not-fresh";
    case Errc::NotInvertible: return "not-invertible";
    case Errc::Undecomposable: return "undecomposable";
    case Errc::SideCondition: return "side-condition";
    case Errc::OracleUnknown: return "oracle-unknown";
    case Errc::NotProvable: return "not-provable";
    case Errc::BadProof: return "bad-proof";
    case Errc::Budget: return "budget";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Convenience for unreachable/invariant checks that must never be compiled out.
inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace sntab
