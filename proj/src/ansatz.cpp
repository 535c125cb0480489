#include "qmae/ansatz.hpp"

#include <sstream>

namespace qmae {

std::vector<GateOp> build_pair_block(int q_i, int q_j, int param_offset) {
    if (q_i == q_j) {
        throw Error(ErrorKind::Index, "pair block qubits must differ");
    }
    int p = param_offset;
    std::vector<GateOp> g;
    g.reserve(18);
    auto rot3 = [&](int q) {
        g.push_back({GateKind::RZ, q, -1, p++});
        g.push_back({GateKind::RY, q, -1, p++});
        g.push_back({GateKind::RZ, q, -1, p++});
    };
    rot3(q_i);
    rot3(q_j);
    g.push_back({GateKind::CNOT, q_j, q_i, -1});
    g.push_back({GateKind::RZ, q_i, -1, p++});
    g.push_back({GateKind::RY, q_j, -1, p++});
    g.push_back({GateKind::CNOT, q_i, q_j, -1});
    g.push_back({GateKind::RY, q_j, -1, p++});
    g.push_back({GateKind::CNOT, q_j, q_i, -1});
    rot3(q_i);
    rot3(q_j);
    return g;
}

AnsatzCircuit build_encoder(int n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidSize, "encoder needs at least 2 qubits");
    }
    AnsatzCircuit c;
    c.n_qubits = n;
    int offset = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto block = build_pair_block(i, j, offset);
            c.gates.insert(c.gates.end(), block.begin(), block.end());
            offset += 15;
        }
    }
    c.n_params = offset;
    return c;
}

namespace {

void check_application(const StateVector& s, const AnsatzCircuit& c,
                       std::span<const double> theta, int base) {
    if (static_cast<int>(theta.size()) != c.n_params) {
        throw Error(ErrorKind::Param,
                    "theta length " + std::to_string(theta.size()) + " does not match circuit parameter count " +
                        std::to_string(c.n_params));
    }
    if (base < 0 || base + c.n_qubits > s.n_qubits()) {
        throw Error(ErrorKind::Param,
                    "circuit window [" + std::to_string(base) + ", " + std::to_string(base + c.n_qubits) +
                        ") does not fit in a " + std::to_string(s.n_qubits()) + "-qubit state");
    }
}

void apply_gate(StateVector& s, const GateOp& g, double angle, int base) {
    switch (g.kind) {
    case GateKind::RY:
        s.apply_ry(base + g.q0, angle);
        break;
    case GateKind::RZ:
        s.apply_rz(base + g.q0, angle);
        break;
    case GateKind::CNOT:
        s.apply_cnot(base + g.q0, base + g.q1);
        break;
    }
}

} // namespace

void apply_encoder(StateVector& s, const AnsatzCircuit& c, std::span<const double> theta,
                   int base, const AngleShift& shift) {
    check_application(s, c, theta, base);
    for (const GateOp& g : c.gates) {
        double angle = 0.0;
        if (g.kind != GateKind::CNOT) {
            angle = theta[static_cast<std::size_t>(g.param_index)];
            if (g.param_index == shift.param_index) angle += shift.delta;
        }
        apply_gate(s, g, angle, base);
    }
}

void apply_decoder(StateVector& s, const AnsatzCircuit& c, std::span<const double> theta,
                   int base, const AngleShift& shift) {
    check_application(s, c, theta, base);
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        const GateOp& g = *it;
        double angle = 0.0;
        if (g.kind != GateKind::CNOT) {
            angle = -theta[static_cast<std::size_t>(g.param_index)];
            if (g.param_index == shift.param_index) angle += shift.delta;
        }
        apply_gate(s, g, angle, base);
    }
}

std::string dump_circuit(const AnsatzCircuit& c) {
    std::ostringstream out;
    for (const GateOp& g : c.gates) {
        switch (g.kind) {
        case GateKind::RY:
            out << "RY q" << g.q0 << " p" << g.param_index << "\n";
            break;
        case GateKind::RZ:
            out << "RZ q" << g.q0 << " p" << g.param_index << "\n";
            break;
        case GateKind::CNOT:
            out << "CNOT q" << g.q0 << " q" << g.q1 << " -\n";
            break;
        }
    }
    return out.str();
}

} // namespace qmae
