#include "polyidp/simplex.hpp"

namespace polyidp {

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::optional<std::vector<mpq_class>> find_nonnegative_solution(const IntMatrix& a, std::span<const long long> b) {
    try {
        auto small = detail::phase_one<SmallRational>(a, b);
        if (!small) return std::nullopt;
        std::vector<mpq_class> out;
        out.reserve(small->size());
        for (const auto& q : *small) out.push_back(q.to_mpq());
        return out;
    } catch (const RationalOverflow&) {
        return detail::phase_one<mpq_class>(a, b);
    }
}

bool has_nonnegative_solution(const IntMatrix& a, std::span<const long long> b) {
    try {
        return detail::phase_one<SmallRational>(a, b).has_value();
    } catch (const RationalOverflow&) {
        return detail::phase_one<mpq_class>(a, b).has_value();
    }
}

} // namespace polyidp
