#ifndef HOMHOPF_REPORT_HPP
#define HOMHOPF_REPORT_HPP

#include <string>
#include <vector>

#include "homhopf/matrix.hpp"

namespace homhopf {

// One failed identity, with both sides evaluated at the witnessing basis
// tuple so failures are debuggable without re-running.
struct Violation {
    std::string axiom;
    std::vector<std::size_t> indices;
    std::string lhs;
    std::string rhs;
};

struct AxiomReport {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    void add(std::string axiom, std::vector<std::size_t> indices, std::string lhs,
             std::string rhs) {
        violations.push_back({std::move(axiom), std::move(indices), std::move(lhs), std::move(rhs)});
    }
    void merge(const AxiomReport& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
    bool has(const std::string& axiom) const {
        for (const auto& v : violations)
            if (v.axiom == axiom) return true;
        return false;
    }
    std::string str() const;
};

// Compare two matrices realizing the same multi-linear identity, reporting
// one violation per differing input basis tuple. `in_dims` are the leg
// dimensions of the common source; `names`, when given, renders outputs
// against that basis.
void compare_maps(AxiomReport& report, const std::string& axiom, const Matrix& lhs,
                  const Matrix& rhs, const std::vector<std::size_t>& in_dims,
                  const std::vector<std::string>* names = nullptr);

} // namespace homhopf

#endif
