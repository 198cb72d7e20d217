#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catnet {

enum class Errc {
  InvalidArgument,
  InvalidGraph,
  CycleDetected,
  InvalidProbability,
  EmptyLayer,
  NotSimple,
  NotFaceClosed,
  NonMonotone,
  NonBinary,
  LengthMismatch,
  AlphabetMismatch,
  DegenerateCode,
  UnboundedRate,
  InfeasibleConversion,
  UnknownEdge,
  UndefinedSubgraph,
  DimensionMismatch,
  ModeMismatch,
  WordBudgetExceeded,
  ProductBudgetExceeded,
  StateNotFound,
  BudgetExceeded,
  MachineNotStronglyConnected,
  CondensationNotAcyclic,
  EnumerationBudgetExceeded,
  InvalidAlpha,
  SupportViolation,
  AxisMismatch,
  NoConvergence,
  TooManyUnits,
  ParseError,
  ConfigError,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception carrying a machine-checkable error kind. Every failure path in
/// the library throws this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::InvalidProbability: return "InvalidProbability";
    case Errc::EmptyLayer: return "EmptyLayer";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotFaceClosed: return "NotFaceClosed";
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::NonBinary: return "NonBinary";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::DegenerateCode: return "DegenerateCode";
    case Errc::UnboundedRate: return "UnboundedRate";
    case Errc::InfeasibleConversion: return "InfeasibleConversion";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::UndefinedSubgraph: return "UndefinedSubgraph";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::WordBudgetExceeded: return "WordBudgetExceeded";
    case Errc::ProductBudgetExceeded: return "ProductBudgetExceeded";
    case Errc::StateNotFound: return "StateNotFound";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::MachineNotStronglyConnected: return "MachineNotStronglyConnected";
    case Errc::CondensationNotAcyclic: return "CondensationNotAcyclic";
    case Errc::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::SupportViolation: return "SupportViolation";
    case Errc::AxisMismatch: return "AxisMismatch";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::TooManyUnits: return "TooManyUnits";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace catnet
