#pragma once

#include <stdexcept>
#include <string>

namespace wmg {

// Common base so callers can catch any library-raised failure at once.
class wmg_error : public std::runtime_error {
protected:
    explicit wmg_error(const std::string& what) : std::runtime_error(what) {}
};

// Input fails a documented precondition (bad grid, malformed curve, ...).
class invalid_input_error : public wmg_error {
public:
    explicit invalid_input_error(const std::string& what) : wmg_error(what) {}
};

// A point lies outside the domain an operation requires it to be in.
class domain_violation_error : public wmg_error {
public:
    explicit domain_violation_error(const std::string& what) : wmg_error(what) {}
};

// Operation-specific precondition violated (radius too large, endpoint in the
// boundary collar, missing derivative oracle, ...).
class precondition_error : public wmg_error {
public:
    explicit precondition_error(const std::string& what) : wmg_error(what) {}
};

// Adaptive refinement hit its depth cap before meeting the tolerance.
// Carries the last two iterates so the caller can judge how far apart they are.
class convergence_error : public wmg_error {
public:
    convergence_error(const std::string& what, double previous, double last)
        : wmg_error(what), previous_iterate(previous), last_iterate(last) {}

    double previous_iterate;
    double last_iterate;
};

// Grid search could not connect the endpoints at the requested resolution.
class resolution_error : public wmg_error {
public:
    explicit resolution_error(const std::string& what) : wmg_error(what) {}
};

// A majorant whose derivative vanishes (or worse) where it must be positive.
class degenerate_majorant_error : public wmg_error {
public:
    explicit degenerate_majorant_error(const std::string& what) : wmg_error(what) {}
};

} // namespace wmg
