#include "hookspecht/relations.hpp"

namespace hookspecht {

RelationReport check_klr_relations_all(int dmax, const std::vector<int>& e_list,
                                       const std::vector<long>& chars) {
    RelationReport total;
    for (int e : e_list) {
        Quiver q(e);
        for (int d = 1; d <= dmax; ++d)
            for (int k = 0; k <= d - 1; ++k) {
                HookModule m(HookShape(d, k), q);
                for (long c : chars) {
                    if (c == 0)
                        total.merge(check_klr_relations(m, Rationals{}));
                    else
                        total.merge(check_klr_relations(m, PrimeField(c)));
                }
            }
    }
    return total;
}

} // namespace hookspecht
