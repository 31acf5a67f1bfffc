#pragma once

#include <stdexcept>
#include <string>

namespace mwlab {

// Thrown when an enumeration, transform, or series refinement would exceed
// the caller-supplied work budget.  Budgets cap the number of objects walked
// (codewords, matrices, lattice points), not wall-clock time.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mwlab
