#pragma once

#include <stdexcept>
#include <string>

namespace corner {

enum class Err {
	DegreeOverflow,
	DegreeUnderflow,
	DegreeMismatch,
	BaseMismatch,
	NotTopForm,
	NotTopFiber,
	OddCoefficients,
	DegenerateFrame,
	ZeroInput,
	NonzeroPfaffian,
	DependentInput,
	PfaffianNonzeroAtPoint,
	TransversalityFailureAtPoint,
	OrientationMismatch,
	UnknownTheory,
	UnknownPolarization,
	MissingHamiltonianField,
	NotHamiltonian,
	PfaffianNotPositiveAtSamples,
	ConfigError,
	Internal,
};

inline const char *err_name(Err e)
{
	switch (e)
	{
	case Err::DegreeOverflow: return "DegreeOverflow";
	case Err::DegreeUnderflow: return "DegreeUnderflow";
	case Err::DegreeMismatch: return "DegreeMismatch";
	case Err::BaseMismatch: return "BaseMismatch";
	case Err::NotTopForm: return "NotTopForm";
	case Err::NotTopFiber: return "NotTopFiber";
	case Err::OddCoefficients: return "OddCoefficients";
	case Err::DegenerateFrame: return "DegenerateFrame";
	case Err::ZeroInput: return "ZeroInput";
	case Err::NonzeroPfaffian: return "NonzeroPfaffian";
	case Err::DependentInput: return "DependentInput";
	case Err::PfaffianNonzeroAtPoint: return "PfaffianNonzeroAtPoint";
	case Err::TransversalityFailureAtPoint: return "TransversalityFailureAtPoint";
	case Err::OrientationMismatch: return "OrientationMismatch";
	case Err::UnknownTheory: return "UnknownTheory";
	case Err::UnknownPolarization: return "UnknownPolarization";
	case Err::MissingHamiltonianField: return "MissingHamiltonianField";
	case Err::NotHamiltonian: return "NotHamiltonian";
	case Err::PfaffianNotPositiveAtSamples: return "PfaffianNotPositiveAtSamples";
	case Err::ConfigError: return "ConfigError";
	case Err::Internal: return "Internal";
	}
	return "Unknown";
}

/** Exception type carrying a machine-readable error code. */
class Error : public std::runtime_error {
  public:
	Error(Err code, std::string const &msg)
	    : std::runtime_error(std::string(err_name(code)) + ": " + msg),
	      code_(code)
	{}
	Err code() const { return code_; }

  private:
	Err code_;
};

[[noreturn]] inline void fail(Err code, std::string const &msg)
{
	throw Error(code, msg);
}

inline void require(bool cond, Err code, std::string const &msg)
{
	if (!cond)
		fail(code, msg);
}

} // namespace corner
