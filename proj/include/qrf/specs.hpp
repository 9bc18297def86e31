// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_SPECS_HPP
#define QRF_SPECS_HPP

#include <string>

#include "qrf/channels.hpp"
#include "qrf/linalg.hpp"
#include "qrf/reps.hpp"

namespace qrf {

// "su2:j=3/2" | "su2:qubits=4" | "u1:charges=0,1,2"
Representation parse_representation_spec(const std::string& spec);

// "unitary:rot-z:theta=1.0" | "depolarizing:p=0.3" | "kraus-file:<path>"
// Kraus files hold a JSON list of matrices; every entry is an [re, im] pair.
QuantumChannel parse_channel_spec(const std::string& spec);

// "coherent:l=4:dir=z" | "mixed:uniform" | "file:<path>"
// The result must be a d_r x d_r density matrix.
ComplexMatrix parse_reference_spec(const std::string& spec, Eigen::Index d_r);

// Accepts "3/2", "1.5", or "2"; `field` names the config field in errors.
double parse_half_integer(const std::string& text, const std::string& field);

}  // namespace qrf

#endif  // QRF_SPECS_HPP
