#ifndef HOMHOPF_ERRORS_HPP
#define HOMHOPF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homhopf {

// Malformed or dimensionally inconsistent input. Distinct from an axiom
// failure: a report with violations is a valid answer, an InputError is not.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structure map (alpha, mu, S, ...) is singular where the theory requires
// an automorphism.
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

// A theorem hypothesis (centrality, certified input, ...) does not hold for
// this instance. Carries the violated condition by name.
struct HypothesesNotMet : std::runtime_error {
    std::string condition;
    HypothesesNotMet(std::string cond, const std::string& what)
        : std::runtime_error(what), condition(std::move(cond)) {}
};

// No structure-map-intertwining linear retraction exists over the field.
struct NoEquivariantRetraction : std::runtime_error {
    explicit NoEquivariantRetraction(const std::string& what) : std::runtime_error(what) {}
};

// A constructed object failed its own mandatory re-check. Indicates a bug in
// this library, never a user error.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace homhopf

#endif
