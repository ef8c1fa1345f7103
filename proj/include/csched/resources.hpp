#pragma once

#include <cmath>

namespace csched {

// CPU + memory quantity in normalized machine-fraction units. Used both for
// container demands and node capacities.
struct ResourceVector {
    double cpu = 0.0;
    double mem = 0.0;

    ResourceVector& operator+=(const ResourceVector& o) {
        cpu += o.cpu;
        mem += o.mem;
        return *this;
    }

    ResourceVector& operator-=(const ResourceVector& o) {
        cpu -= o.cpu;
        mem -= o.mem;
        return *this;
    }

    friend ResourceVector operator+(ResourceVector a, const ResourceVector& b) { return a += b; }
    friend ResourceVector operator-(ResourceVector a, const ResourceVector& b) { return a -= b; }

    friend bool operator==(const ResourceVector& a, const ResourceVector& b) {
        return a.cpu == b.cpu && a.mem == b.mem;
    }

    // Component-wise <=, the fit test of the capacity constraint.
    bool fits_within(const ResourceVector& cap) const { return cpu <= cap.cpu && mem <= cap.mem; }

    bool is_zero() const { return cpu == 0.0 && mem == 0.0; }
};

// Finite and component-wise nonnegative.
inline bool is_valid_resource(const ResourceVector& r) {
    return std::isfinite(r.cpu) && std::isfinite(r.mem) && r.cpu >= 0.0 && r.mem >= 0.0;
}

}  // namespace csched
