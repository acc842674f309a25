#include "homhopf/report.hpp"

#include <sstream>

#include "homhopf/errors.hpp"

namespace homhopf {

std::string AxiomReport::str() const {
    if (pass()) return "pass";
    std::ostringstream os;
    os << "fail (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s")
       << ")";
    for (const auto& v : violations) {
        os << "\n  " << v.axiom << " at (";
        for (std::size_t i = 0; i < v.indices.size(); ++i)
            os << (i ? "," : "") << v.indices[i];
        os << "): lhs = " << v.lhs << ", rhs = " << v.rhs;
    }
    return os.str();
}

void compare_maps(AxiomReport& report, const std::string& axiom, const Matrix& lhs,
                  const Matrix& rhs, const std::vector<std::size_t>& in_dims,
                  const std::vector<std::string>* names) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw InternalInconsistency("axiom \"" + axiom + "\": side shapes disagree");
    std::size_t total = 1;
    for (std::size_t d : in_dims) total *= d;
    if (total != lhs.cols())
        throw InternalInconsistency("axiom \"" + axiom + "\": leg dimensions disagree");
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        Vec l = lhs.col(c), r = rhs.col(c);
        if (!vec_eq(l, r))
            report.add(axiom, unflatten(c, in_dims), vec_str(l, names), vec_str(r, names));
    }
}

} // namespace homhopf
