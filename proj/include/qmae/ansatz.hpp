#pragma once

#include <span>
#include <string>
#include <vector>

#include "qmae/statevec.hpp"

namespace qmae {

enum class GateKind { RY, RZ, CNOT };

/// One gate of the ansatz. Rotations carry exactly one parameter index;
/// CNOT carries none (param_index = -1, q0 = control, q1 = target).
struct GateOp {
    GateKind kind;
    int q0;
    int q1 = -1;
    int param_index = -1;
};

/// The pairwise-entangling encoder template: one 18-gate block per
/// unordered qubit pair, 15 trainable angles per block.
struct AnsatzCircuit {
    int n_qubits = 0;
    std::vector<GateOp> gates;
    int n_params = 0;
};

/// Number of trainable circuit angles for an n-qubit encoder:
/// n(n-1)/2 pair blocks of 15 parameters each.
inline int encoder_param_count(int n) { return n * (n - 1) / 2 * 15; }

/// The two-qubit interaction block on (q_i, q_j): 9 RZ, 6 RY, 3 CNOT,
/// with 15 consecutive parameter indices starting at param_offset.
///
/// Fixed gate order (a universal two-qubit decomposition):
///   RZ,RY,RZ on q_i; RZ,RY,RZ on q_j;            params 0..5
///   CNOT(q_j -> q_i); RZ(q_i); RY(q_j);          params 6..7
///   CNOT(q_i -> q_j); RY(q_j);                   param  8
///   CNOT(q_j -> q_i);
///   RZ,RY,RZ on q_i; RZ,RY,RZ on q_j;            params 9..14
/// At all-zero angles the three alternating CNOTs compose to SWAP(q_i,q_j).
std::vector<GateOp> build_pair_block(int q_i, int q_j, int param_offset);

/// Encoder over all unordered pairs (i,j), i<j, in lexicographic order.
AnsatzCircuit build_encoder(int n);

/// Single-parameter angle adjustment for gradient evaluation: adds `delta`
/// to the effective angle of the gate(s) carrying `param_index`. Applied
/// after the decoder's sign flip, i.e. always to the physical gate angle.
struct AngleShift {
    int param_index = -1;
    double delta = 0.0;
};

/// Applies the circuit's gates in order onto the contiguous qubit window
/// starting at `base`.
void apply_encoder(StateVector& s, const AnsatzCircuit& c, std::span<const double> theta,
                   int base, const AngleShift& shift = {});

/// Adjoint of the encoder: gates in reverse order with negated angles.
void apply_decoder(StateVector& s, const AnsatzCircuit& c, std::span<const double> theta,
                   int base, const AngleShift& shift = {});

/// One gate per line: kind, qubit(s), parameter index.
std::string dump_circuit(const AnsatzCircuit& c);

} // namespace qmae
