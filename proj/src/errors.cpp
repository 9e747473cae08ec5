#include "hecke_lab/errors.hpp"

namespace hecke_lab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::DecorationNotClassConstant: return "DecorationNotClassConstant";
    case ErrorCode::LatticeNotIntermediate: return "LatticeNotIntermediate";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::HilbertBasisOverflow: return "HilbertBasisOverflow";
    case ErrorCode::NotAFullOrbit: return "NotAFullOrbit";
    case ErrorCode::NegativePowersPresent: return "NegativePowersPresent";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::CharacterExtends: return "CharacterExtends";
    case ErrorCode::NoIndexTwoStructure: return "NoIndexTwoStructure";
    case ErrorCode::NotSimplyLaced: return "NotSimplyLaced";
    case ErrorCode::NotSplitAtV0: return "NotSplitAtV0";
    case ErrorCode::RelationsFail: return "RelationsFail";
    case ErrorCode::UnhandledCase: return "UnhandledCase";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace hecke_lab
