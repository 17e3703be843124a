// Exception types shared by every stage of the engine.
//
// The command line tool maps each family onto a distinct exit code, so
// new errors should derive from the family that describes who is at fault:
// the input (InvalidInput), the standing hypotheses on p (HypothesisViolation)
// or the engine itself (InternalInconsistency).

#ifndef HOPF_FUSION_ERRORS_HPP_
#define HOPF_FUSION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hopf_fusion {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct NotAGroup : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Singular antipode or structurally unusable tensors.
struct InvalidHopf : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct NotSemisimple : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct DegenerateIntegralSpace : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct HypothesisViolation : Error {
  using Error::Error;
};

struct InternalInconsistency : Error {
  using Error::Error;
};

// dim(H e_i) is not a perfect square: the block data cannot come from a
// split semisimple algebra.
struct NonSquareBlockDim : InternalInconsistency {
  using InternalInconsistency::InternalInconsistency;
};

struct NonIntegralCoefficient : InternalInconsistency {
  using InternalInconsistency::InternalInconsistency;
};

struct RepresentationSplitFailure : InternalInconsistency {
  using InternalInconsistency::InternalInconsistency;
};

// A minimal polynomial has an irreducible factor of degree > 1; the caller
// should retry over GF(p^(k*degree)).
struct SplittingFieldTooSmall : Error {
  SplittingFieldTooSmall(const std::string& msg, unsigned degree)
      : Error(msg), degree(degree) {}
  unsigned degree;
};

// A required square root does not exist in the working field.
struct NonResidue : Error {
  explicit NonResidue(const std::string& msg, unsigned extension = 2)
      : Error(msg), extension(extension) {}
  unsigned extension;
};

// The operator is not semisimple (repeated factor in a minimal polynomial).
struct NotDiagonalizable : InternalInconsistency {
  using InternalInconsistency::InternalInconsistency;
};

} // namespace hopf_fusion

#endif
