#include "qmae/statevec.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qmae/rng.hpp"

namespace qmae {

StateVector::StateVector(int n_qubits, int max_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > max_qubits) {
        throw Error(ErrorKind::InvalidSize,
                    "state size must be between 1 and " + std::to_string(max_qubits) +
                        " qubits, got " + std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
    amps_[0] = cdouble{1.0, 0.0};
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= n_) {
        throw Error(ErrorKind::Index,
                    "qubit index " + std::to_string(q) + " out of range for " +
                        std::to_string(n_) + " qubits");
    }
}

void StateVector::apply_single(int q, cdouble u00, cdouble u01, cdouble u10, cdouble u11) {
    const std::size_t m = bit(q);
    const std::size_t n = amps_.size();
    for (std::size_t hi = 0; hi < n; hi += m << 1) {
        for (std::size_t lo = hi; lo < hi + m; ++lo) {
            const cdouble a0 = amps_[lo];
            const cdouble a1 = amps_[lo + m];
            amps_[lo] = u00 * a0 + u01 * a1;
            amps_[lo + m] = u10 * a0 + u11 * a1;
        }
    }
}

void StateVector::apply_ry(int q, double theta) {
    check_qubit(q);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    apply_single(q, cdouble{c, 0}, cdouble{-s, 0}, cdouble{s, 0}, cdouble{c, 0});
}

void StateVector::apply_rz(int q, double theta) {
    check_qubit(q);
    const cdouble e0 = std::polar(1.0, -theta / 2.0);
    const cdouble e1 = std::polar(1.0, theta / 2.0);
    const std::size_t m = bit(q);
    const std::size_t n = amps_.size();
    for (std::size_t hi = 0; hi < n; hi += m << 1) {
        for (std::size_t lo = hi; lo < hi + m; ++lo) {
            amps_[lo] *= e0;
            amps_[lo + m] *= e1;
        }
    }
}

void StateVector::apply_h(int q) {
    check_qubit(q);
    const double r = 1.0 / std::sqrt(2.0);
    apply_single(q, cdouble{r, 0}, cdouble{r, 0}, cdouble{r, 0}, cdouble{-r, 0});
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw Error(ErrorKind::Index, "cnot control and target must differ");
    }
    const std::size_t mc = bit(control);
    const std::size_t mt = bit(target);
    const std::size_t n = amps_.size();
    // exchange |c=1,t=0> and |c=1,t=1>
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & mc) && !(i & mt)) {
            std::swap(amps_[i], amps_[i | mt]);
        }
    }
}

void StateVector::apply_swap(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw Error(ErrorKind::Index, "swap qubits must differ");
    }
    const std::size_t ma = bit(a);
    const std::size_t mb = bit(b);
    const std::size_t n = amps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & ma) && !(i & mb)) {
            std::swap(amps_[i], amps_[(i ^ ma) | mb]);
        }
    }
}

void StateVector::apply_cswap(int control, int a, int b) {
    check_qubit(control);
    check_qubit(a);
    check_qubit(b);
    if (control == a || control == b || a == b) {
        throw Error(ErrorKind::Index, "cswap qubits must be distinct");
    }
    const std::size_t mc = bit(control);
    const std::size_t ma = bit(a);
    const std::size_t mb = bit(b);
    const std::size_t n = amps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & mc) && (i & ma) && !(i & mb)) {
            std::swap(amps_[i], amps_[(i ^ ma) | mb]);
        }
    }
}

double StateVector::expectation_z(int q) const {
    check_qubit(q);
    const std::size_t m = bit(q);
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        acc += (i & m) ? -p : p;
    }
    return acc;
}

double StateVector::sample_z(int q, std::uint64_t shots, std::uint64_t seed) const {
    check_qubit(q);
    if (shots == 0) {
        throw Error(ErrorKind::Config, "sample_z requires at least one shot");
    }
    const std::size_t m = bit(q);
    double p_one = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & m) p_one += std::norm(amps_[i]);
    }
    std::mt19937_64 gen(seed);
    std::uint64_t ones = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (rng::canonical(gen) < p_one) ++ones;
    }
    return (static_cast<double>(shots) - 2.0 * static_cast<double>(ones)) /
           static_cast<double>(shots);
}

double StateVector::norm_sq() const {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
}

double DensityMatrix::trace() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < side(); ++i) acc += at(i, i).real();
    return acc;
}

DensityMatrix reduced_density(const StateVector& s, std::span<const int> keep) {
    constexpr std::size_t kMaxSide = std::size_t{1} << 12;
    const int n = s.n_qubits();
    if (keep.empty()) {
        throw Error(ErrorKind::Index, "reduced_density needs at least one qubit to keep");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int q : keep) {
        if (q < 0 || q >= n) {
            throw Error(ErrorKind::Index, "reduced_density qubit " + std::to_string(q) + " out of range");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw Error(ErrorKind::Index, "reduced_density keep list has duplicates");
        }
        seen[static_cast<std::size_t>(q)] = true;
    }
    const int n_keep = static_cast<int>(keep.size());
    const std::size_t side = std::size_t{1} << n_keep;
    if (side > kMaxSide) {
        throw Error(ErrorKind::Resource,
                    "reduced density over " + std::to_string(n_keep) + " qubits exceeds the 2^12 side guard");
    }

    // Environment qubits in ascending order.
    std::vector<int> env;
    for (int q = 0; q < n; ++q) {
        if (!seen[static_cast<std::size_t>(q)]) env.push_back(q);
    }
    const int n_env = static_cast<int>(env.size());
    const std::size_t env_dim = std::size_t{1} << n_env;

    auto global_bit = [n](int q) { return std::size_t{1} << (n - 1 - q); };

    // Scatter tables: reduced/env index -> contribution to the global index.
    std::vector<std::size_t> keep_offset(side, 0);
    for (std::size_t r = 0; r < side; ++r) {
        for (int j = 0; j < n_keep; ++j) {
            if (r & (std::size_t{1} << (n_keep - 1 - j))) keep_offset[r] |= global_bit(keep[j]);
        }
    }
    std::vector<std::size_t> env_offset(env_dim, 0);
    for (std::size_t e = 0; e < env_dim; ++e) {
        for (int j = 0; j < n_env; ++j) {
            if (e & (std::size_t{1} << (n_env - 1 - j))) env_offset[e] |= global_bit(env[j]);
        }
    }

    DensityMatrix rho;
    rho.n_qubits = n_keep;
    rho.entries.assign(side * side, cdouble{0.0, 0.0});
    const auto& amps = s.amps();
    for (std::size_t e = 0; e < env_dim; ++e) {
        const std::size_t eo = env_offset[e];
        for (std::size_t r = 0; r < side; ++r) {
            const cdouble ar = amps[keep_offset[r] | eo];
            if (ar == cdouble{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < side; ++c) {
                rho.entries[r * side + c] += ar * std::conj(amps[keep_offset[c] | eo]);
            }
        }
    }
    return rho;
}

} // namespace qmae
