#pragma once

#include <string>

#include "qchan/bounds.hpp"
#include "qchan/verify.hpp"

namespace qchan {

// JSON text interfaces. Bases read as {"bloch": [theta, phi]} or
// {"vectors": [[[re,im],[re,im]], [[re,im],[re,im]]]}; channels read as
// {"preset": {"name": "...", "params": {...}}} or {"kraus": [op, ...]} with
// each operator a 2x2 array of [re, im] pairs. Parse failures raise
// DomainError with a one-line diagnostic.

QubitBasis parse_basis_json(const std::string& text);
KrausChannel parse_channel_json(const std::string& text);

std::string basis_to_json(const QubitBasis& basis);
std::string coherence_to_json(const CoherenceValue& value);
std::string report_to_json(const UncertaintyReport& report);
std::string verification_to_json(const VerificationReport& report);

}  // namespace qchan
