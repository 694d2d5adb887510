#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace homtorus {

// Domain errors carry a stable name used by the CLI (exit code 1).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define HOMTORUS_ERROR(NAME)                                             \
    class NAME : public DomainError {                                    \
    public:                                                              \
        explicit NAME(const std::string& what) : DomainError(#NAME, what) {} \
    }

// polynomial ring
HOMTORUS_ERROR(VariableMismatch);
HOMTORUS_ERROR(NotDivisible);
HOMTORUS_ERROR(MalformedPolynomial);

// diagrams
HOMTORUS_ERROR(MalformedPD);
HOMTORUS_ERROR(MalformedBraid);
HOMTORUS_ERROR(InconsistentEdges);
HOMTORUS_ERROR(NonClosedComponent);

// group / link invariants
HOMTORUS_ERROR(NotAKnot);
HOMTORUS_ERROR(WrongComponentCount);
HOMTORUS_ERROR(ZeroLinkingRequired);

// cohomology ring
HOMTORUS_ERROR(NotUnimodular);

// finite-dimensional model
HOMTORUS_ERROR(TauTooLarge);
HOMTORUS_ERROR(NonGenericH);
HOMTORUS_ERROR(NoConvergence);

// surgery predictions
HOMTORUS_ERROR(NotAKnotPolynomial);
HOMTORUS_ERROR(NotSymmetrizable);

#undef HOMTORUS_ERROR

} // namespace homtorus
