#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qmae/errors.hpp"

namespace qmae {

using cdouble = std::complex<double>;

/// Dense statevector over n qubits.
///
/// Bit ordering convention (global across the project): qubit 0 is the
/// MOST significant bit of the basis index. For an n-qubit state, qubit q
/// corresponds to bit position (n-1-q) counted from the least significant
/// bit. So for n=2, basis index 2 = 0b10 is |q0=1, q1=0>.
///
/// Gates mutate the state in place (single writer); distinct StateVector
/// values are independent and safe to use concurrently.
class StateVector {
public:
    static constexpr int kDefaultMaxQubits = 24;

    /// Constructs |0...0>.
    explicit StateVector(int n_qubits, int max_qubits = kDefaultMaxQubits);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    const std::vector<cdouble>& amps() const { return amps_; }
    std::vector<cdouble>& mutable_amps() { return amps_; }
    cdouble amp(std::size_t i) const { return amps_[i]; }

    /// RY(theta) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
    void apply_ry(int q, double theta);
    /// RZ(theta) = diag(e^{-i t/2}, e^{+i t/2})  (symmetric phase convention)
    void apply_rz(int q, double theta);
    void apply_h(int q);
    void apply_cnot(int control, int target);
    void apply_swap(int a, int b);
    void apply_cswap(int control, int a, int b);

    /// <Z> on qubit q: sum_i |amp_i|^2 * (+1 if bit q of i is 0 else -1).
    double expectation_z(int q) const;

    /// Shot-based estimate of expectation_z: mean of `shots` +/-1 outcomes
    /// drawn from the measurement distribution. Deterministic for a fixed
    /// seed (mt19937_64 with an explicit 53-bit uniform mapping).
    double sample_z(int q, std::uint64_t shots, std::uint64_t seed) const;

    double norm_sq() const;

private:
    std::size_t bit(int q) const { return std::size_t{1} << (n_ - 1 - q); }
    void check_qubit(int q) const;
    void apply_single(int q, cdouble u00, cdouble u01, cdouble u10, cdouble u11);

    int n_;
    std::vector<cdouble> amps_;
};

/// Dense density matrix over n qubits, row-major, side 2^n.
/// Index convention matches StateVector (qubit 0 = MSB).
struct DensityMatrix {
    int n_qubits = 0;
    std::vector<cdouble> entries;

    std::size_t side() const { return std::size_t{1} << n_qubits; }
    cdouble at(std::size_t r, std::size_t c) const { return entries[r * side() + c]; }
    cdouble& at(std::size_t r, std::size_t c) { return entries[r * side() + c]; }
    double diag(std::size_t i) const { return at(i, i).real(); }
    double trace() const;
};

/// Partial trace keeping the listed qubits, in the listed order (keep[0]
/// becomes the most significant bit of the reduced index). The remaining
/// qubits are traced out. Guard: 2^|keep| <= 2^12.
DensityMatrix reduced_density(const StateVector& s, std::span<const int> keep);

} // namespace qmae
