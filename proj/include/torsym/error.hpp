#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torsym {

enum class ErrorKind {
  Rank,
  NotExtendable,
  NotPrimitive,
  UnknownVertex,
  LabelCollision,
  InvalidPair,
  ZeroDual,
  NotNormalized,
  NotAFace,
  RankMismatch,
  NotSimple,
  Unbounded,
  RedundantFacet,
  SingletonClass,
  DichotomyViolation,
  CaseMismatch,
  NotExceptional,
  NotClassPreserving,
  NotAPartition,
  NotAdmissible,
  SizeGuard,
  UnknownCatalog,
  InvalidArgument,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; the kind is the
// stable, machine-checkable part and the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Violation {
  std::string code;
  std::string message;
  std::vector<std::string> facets;
};

// Result of a check that collects every failure instead of stopping at the
// first one.
struct Report {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void add(std::string code, std::string message,
           std::vector<std::string> facets = {}) {
    violations.push_back({std::move(code), std::move(message), std::move(facets)});
  }

  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

}  // namespace torsym
